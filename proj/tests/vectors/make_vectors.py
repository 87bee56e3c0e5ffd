#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Regenerates the .rsp fixture files in this directory.

Digests come from Python's hashlib, which keeps the fixtures independent of
the C++ implementation under test.  Message contents are derived
deterministically from the vector label, so reruns are byte-identical.
"""
import hashlib
import pathlib

HERE = pathlib.Path(__file__).parent

HASHES = {
    "SHA3_224": ("sha3_224", 224, 1152),
    "SHA3_256": ("sha3_256", 256, 1088),
    "SHA3_384": ("sha3_384", 384, 832),
    "SHA3_512": ("sha3_512", 512, 576),
}
XOFS = {
    "SHAKE128": ("shake_128", 128, 1344),
    "SHAKE256": ("shake_256", 256, 1088),
}


def message(label: str, nbits: int) -> bytes:
    if nbits == 0:
        return b""
    return hashlib.shake_128(f"{label}:{nbits}".encode()).digest(nbits // 8)


def short_lengths(rate_bits: int):
    # Every byte length up to just past two blocks of the rate.
    return range(0, rate_bits + 136, 8)


def long_lengths(rate_bits: int):
    base = 2 * rate_bits
    return [base, base + 8, 3 * rate_bits + 64, 65536, 131072]


def write_hash_file(path, label, algo, digest_bits, lengths):
    with open(path, "w") as f:
        f.write(f"# {label} KAT, generated by make_vectors.py\n")
        f.write(f"[L = {digest_bits}]\n\n")
        for nbits in lengths:
            msg = message(label, nbits)
            md = hashlib.new(algo, msg).hexdigest()
            f.write(f"Len = {nbits}\n")
            f.write(f"Msg = {msg.hex() if msg else '00'}\n")
            f.write(f"MD = {md}\n\n")


def write_xof_file(path, label, algo, output_bits, lengths):
    with open(path, "w") as f:
        f.write(f"# {label} KAT, generated by make_vectors.py\n")
        f.write(f"[Outputlen = {output_bits}]\n\n")
        for nbits in lengths:
            msg = message(label, nbits)
            md = hashlib.new(algo, msg).hexdigest(output_bits // 8)
            f.write(f"Len = {nbits}\n")
            f.write(f"Msg = {msg.hex() if msg else '00'}\n")
            f.write(f"MD = {md}\n\n")


def main():
    for label, (algo, digest_bits, rate) in HASHES.items():
        write_hash_file(HERE / f"{label}ShortMsg.rsp", label, algo, digest_bits,
                        short_lengths(rate))
        write_hash_file(HERE / f"{label}LongMsg.rsp", label, algo, digest_bits,
                        long_lengths(rate))
    for label, (algo, output_bits, rate) in XOFS.items():
        write_xof_file(HERE / f"{label}ShortMsg.rsp", label, algo, output_bits,
                       short_lengths(rate))
        write_xof_file(HERE / f"{label}LongMsg.rsp", label, algo, output_bits,
                       long_lengths(rate))
    print("wrote", len(HASHES) * 2 + len(XOFS) * 2, "files under", HERE)


if __name__ == "__main__":
    main()

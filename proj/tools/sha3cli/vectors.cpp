// SPDX-License-Identifier: Apache-2.0
#include "vectors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sha3/hex.hpp"

namespace sha3::bench {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw std::runtime_error("vector file line " + std::to_string(line) + ": " + what);
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) {
    return "";
  }
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

// Splits "Key = value"; returns false for lines of any other shape.
bool key_value(const std::string& line, std::string& key, std::string& value) {
  const auto eq = line.find('=');
  if (eq == std::string::npos) {
    return false;
  }
  key = trim(line.substr(0, eq));
  value = trim(line.substr(eq + 1));
  return !key.empty();
}

}  // namespace

VectorFile parse_vector_file(std::istream& in) {
  VectorFile file;
  std::string line;
  std::size_t line_no = 0;

  std::optional<VectorEntry> pending;
  bool have_msg = false;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') {
      continue;
    }
    if (text.front() == '[' && text.back() == ']') {
      std::string key, value;
      if (key_value(text.substr(1, text.size() - 2), key, value) && key == "Outputlen") {
        try {
          file.output_bits = std::stoull(value);
        } catch (const std::exception&) {
          fail(line_no, "bad Outputlen value '" + value + "'");
        }
      }
      continue;
    }

    std::string key, value;
    if (!key_value(text, key, value)) {
      fail(line_no, "expected 'Key = value', got '" + text + "'");
    }

    if (key == "Len") {
      if (pending) {
        fail(line_no, "new Len before the previous vector was completed");
      }
      VectorEntry e;
      e.line = line_no;
      try {
        e.msg_bits = std::stoull(value);
      } catch (const std::exception&) {
        fail(line_no, "bad Len value '" + value + "'");
      }
      if (e.msg_bits % 8 != 0) {
        fail(line_no, "only byte-aligned lengths are supported (Len = " + value + ")");
      }
      pending = std::move(e);
      have_msg = false;
    } else if (key == "Msg") {
      if (!pending) {
        fail(line_no, "Msg without a preceding Len");
      }
      auto bytes = from_hex(value);
      if (!bytes) {
        fail(line_no, "Msg is not valid hex");
      }
      // Msg is ignored for the empty message (files usually carry "00").
      if (pending->msg_bits > 0) {
        if (bytes->size() < pending->msg_bits / 8) {
          fail(line_no, "Msg shorter than Len");
        }
        bytes->resize(pending->msg_bits / 8);
        pending->message = std::move(*bytes);
      }
      have_msg = true;
    } else if (key == "MD" || key == "Output") {
      if (!pending || !have_msg) {
        fail(line_no, key + " without a preceding Len/Msg pair");
      }
      const auto bytes = from_hex(value);
      if (!bytes || bytes->empty()) {
        fail(line_no, key + " is not valid hex");
      }
      pending->expected = *bytes;
      file.entries.push_back(std::move(*pending));
      pending.reset();
    } else {
      fail(line_no, "unknown key '" + key + "'");
    }
  }
  if (pending) {
    fail(line_no, "file ended in the middle of a vector");
  }
  return file;
}

VectorFile load_vector_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open vector file: " + path);
  }
  return parse_vector_file(in);
}

std::optional<Algorithm> algorithm_from_filename(const std::string& path) {
  std::string name = path;
  const auto slash = name.find_last_of('/');
  if (slash != std::string::npos) {
    name = name.substr(slash + 1);
  }
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const char* sep : {"_", "-", ""}) {
    for (const auto& [tag, alg] : std::initializer_list<std::pair<std::string, Algorithm>>{
             {std::string("sha3") + sep + "224", Algorithm::sha3_224},
             {std::string("sha3") + sep + "256", Algorithm::sha3_256},
             {std::string("sha3") + sep + "384", Algorithm::sha3_384},
             {std::string("sha3") + sep + "512", Algorithm::sha3_512},
             {std::string("shake") + sep + "128", Algorithm::shake128},
             {std::string("shake") + sep + "256", Algorithm::shake256}}) {
      if (name.find(tag) != std::string::npos) {
        return alg;
      }
    }
  }
  return std::nullopt;
}

VectorReport verify_vectors(const VectorFile& file, Algorithm algorithm) {
  const FunctionVariant& v = variant_info(algorithm);
  VectorReport report;
  for (const VectorEntry& e : file.entries) {
    ++report.total;
    std::vector<std::uint8_t> actual;
    if (v.is_xof()) {
      const std::uint64_t bits = file.output_bits ? file.output_bits : e.expected.size() * 8;
      actual = shake(algorithm, e.message, bits);
    } else {
      actual = sha3_digest(algorithm, e.message);
    }
    if (actual == e.expected) {
      ++report.passed;
    } else {
      report.failures.push_back(
          {e.line, e.msg_bits, to_hex(e.expected), to_hex(actual)});
    }
  }
  return report;
}

}  // namespace sha3::bench

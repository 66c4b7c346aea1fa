// base/io.cc

// Copyright 2026  nsasv authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "base/io.h"

#include <sstream>

namespace nsasv {

void WriteString(std::ostream& os, const std::string& s) {
  WriteBasic<uint32_t>(os, static_cast<uint32_t>(s.size()));
  os.write(s.data(), s.size());
}

std::string ReadString(std::istream& is) {
  uint32_t n = ReadBasic<uint32_t>(is);
  std::string s(n, '\0');
  if (n > 0) {
    is.read(s.data(), n);
    if (!is) throw DataError("truncated binary input");
  }
  return s;
}

void WriteMagic(std::ostream& os, const std::string& name, int version) {
  os << name << " v" << version << "\n";
}

int ReadMagic(std::istream& is, const std::string& name, int max_version) {
  std::string line;
  if (!std::getline(is, line))
    throw DataError(Msg() << "empty input, expected '" << name << "' header");
  std::istringstream ls(line);
  std::string got_name, got_ver;
  ls >> got_name >> got_ver;
  if (got_name != name || got_ver.size() < 2 || got_ver[0] != 'v')
    throw DataError(Msg() << "bad header '" << line << "', expected '" << name
                          << " v<N>'");
  int version = std::stoi(got_ver.substr(1));
  if (version < 1 || version > max_version)
    throw DataError(Msg() << name << " version " << version
                          << " not supported (max " << max_version << ")");
  return version;
}

std::ofstream OpenOut(const std::string& path, bool binary) {
  std::ofstream os(path, binary ? std::ios::binary : std::ios::out);
  if (!os) throw DataError(Msg() << "cannot open for writing: " << path);
  return os;
}

std::ifstream OpenIn(const std::string& path, bool binary) {
  std::ifstream is(path, binary ? std::ios::binary : std::ios::in);
  if (!is) throw DataError(Msg() << "cannot open for reading: " << path);
  return is;
}

void WriteTextFile(const std::string& path, const std::string& content) {
  auto os = OpenOut(path, false);
  os << content;
  if (!os) throw DataError(Msg() << "failed writing " << path);
}

std::string ReadTextFile(const std::string& path) {
  auto is = OpenIn(path, false);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace nsasv

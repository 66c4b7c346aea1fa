// base/io.h

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

#ifndef NSASV_BASE_IO_H_
#define NSASV_BASE_IO_H_

#include <cstdint>
#include <fstream>
#include <string>
#include <type_traits>
#include <vector>

#include "base/error.h"

namespace nsasv {

// Little-endian binary primitives for the versioned on-disk containers.
// All container formats start with an ASCII magic line "<NAME> v<N>\n" so a
// mismatched file is rejected with a readable message.

template <typename T>
void WriteBasic(std::ostream& os, T v) {
  static_assert(std::is_trivially_copyable_v<T>);
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T ReadBasic(std::istream& is) {
  static_assert(std::is_trivially_copyable_v<T>);
  T v;
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!is) throw DataError("truncated binary input");
  return v;
}

void WriteString(std::ostream& os, const std::string& s);
std::string ReadString(std::istream& is);

template <typename T>
void WriteVec(std::ostream& os, const std::vector<T>& v) {
  static_assert(std::is_trivially_copyable_v<T>);
  WriteBasic<uint64_t>(os, v.size());
  if (!v.empty())
    os.write(reinterpret_cast<const char*>(v.data()), v.size() * sizeof(T));
}

template <typename T>
std::vector<T> ReadVec(std::istream& is) {
  uint64_t n = ReadBasic<uint64_t>(is);
  std::vector<T> v(n);
  if (n > 0) {
    is.read(reinterpret_cast<char*>(v.data()), n * sizeof(T));
    if (!is) throw DataError("truncated binary input");
  }
  return v;
}

void WriteMagic(std::ostream& os, const std::string& name, int version);

// Reads and checks the magic line; returns the version.  Throws DataError on
// a name mismatch or unsupported version.
int ReadMagic(std::istream& is, const std::string& name, int max_version);

std::ofstream OpenOut(const std::string& path, bool binary = true);
std::ifstream OpenIn(const std::string& path, bool binary = true);

void WriteTextFile(const std::string& path, const std::string& content);
std::string ReadTextFile(const std::string& path);

}  // namespace nsasv

#endif  // NSASV_BASE_IO_H_

// base/hash.h

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

#ifndef NSASV_BASE_HASH_H_
#define NSASV_BASE_HASH_H_

#include <cstddef>
#include <cstdint>
#include <string>

namespace nsasv {

// 64-bit FNV-1a.  Used for content hashes of run artifacts and for seed
// derivation; not cryptographic.
inline uint64_t Fnv1a64(const void* data, size_t len,
                        uint64_t h = 0xcbf29ce484222325ULL) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline uint64_t Fnv1a64(const std::string& s) {
  return Fnv1a64(s.data(), s.size());
}

inline uint64_t HashCombine(uint64_t a, uint64_t b) {
  return Fnv1a64(&b, sizeof(b), a ^ 0x9e3779b97f4a7c15ULL);
}

std::string HexHash(uint64_t h);

// FNV-1a of a whole file's bytes, hex-encoded.  Throws DataError if the file
// cannot be read.
std::string HashFile(const std::string& path);

}  // namespace nsasv

#endif  // NSASV_BASE_HASH_H_

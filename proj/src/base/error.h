// base/error.h

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

#ifndef NSASV_BASE_ERROR_H_
#define NSASV_BASE_ERROR_H_

#include <sstream>
#include <stdexcept>
#include <string>

namespace nsasv {

// Exit codes used by the CLI: 0 success, 1 usage, 2 data error, 3 numeric.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

namespace internal {

// Stream-style message builder so call sites can write
//   throw DataError(Msg() << "bad line " << n);
class Msg {
 public:
  template <typename T>
  Msg& operator<<(const T& v) {
    os_ << v;
    return *this;
  }
  operator std::string() const { return os_.str(); }

 private:
  std::ostringstream os_;
};

}  // namespace internal

using internal::Msg;

#define NSASV_ASSERT(cond)                                                  \
  do {                                                                      \
    if (!(cond)) {                                                          \
      throw std::logic_error(std::string("assertion failed: ") + #cond +   \
                             " at " + __FILE__ + ":" +                      \
                             std::to_string(__LINE__));                     \
    }                                                                       \
  } while (0)

}  // namespace nsasv

#endif  // NSASV_BASE_ERROR_H_

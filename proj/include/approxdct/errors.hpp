/*
Copyright 2026 the approxdct authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef APPROXDCT_ERRORS_HPP
#define APPROXDCT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace approxdct {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input file is not what it claims to be (bad magic, bad header, short body).
class BadFormat : public Error {
public:
    explicit BadFormat(const std::string& msg) : Error(msg) {}
};

// Well-formed image but a sample depth this pipeline does not handle.
class UnsupportedDepth : public Error {
public:
    explicit UnsupportedDepth(const std::string& msg) : Error(msg) {}
};

// Dimension mismatch or dimensions not divisible into 16x16 blocks.
class BadGeometry : public Error {
public:
    explicit BadGeometry(const std::string& msg) : Error(msg) {}
};

// Spectral comparison requested between rows of different index.
class RowMismatch : public Error {
public:
    explicit RowMismatch(const std::string& msg) : Error(msg) {}
};

// The external comparator matrix file is absent.
class ComparatorUnavailable : public Error {
public:
    explicit ComparatorUnavailable(const std::string& msg) : Error(msg) {}
};

// apply_inverse called on a spec whose scaled matrix is not orthogonal.
class NotInvertibleAsTranspose : public Error {
public:
    explicit NotInvertibleAsTranspose(const std::string& msg) : Error(msg) {}
};

// Checked integer arithmetic left the accumulator width.
class ArithmeticOverflow : public Error {
public:
    explicit ArithmeticOverflow(const std::string& msg) : Error(msg) {}
};

// Derived factorization terms violate their structural guarantees.
class FactorizationInconsistent : public Error {
public:
    explicit FactorizationInconsistent(const std::string& msg) : Error(msg) {}
};

// Adaptive integration failed to reach the requested tolerance.
class QuadratureFailure : public Error {
public:
    explicit QuadratureFailure(const std::string& msg) : Error(msg) {}
};

}  // namespace approxdct

#endif

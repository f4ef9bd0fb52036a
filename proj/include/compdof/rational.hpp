// compdof - degrees-of-freedom toolkit for interference channels with cooperating transmit/receive sets
// Copyright 2026 compdof contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COMPDOF_RATIONAL_HPP
#define COMPDOF_RATIONAL_HPP

#include <cstdint>
#include <string>

namespace compdof
{

// Exact rational arithmetic for bound values and achievable fractions. All
// quantities at play are tiny (numerators/denominators of a few hundred), so
// 64-bit storage with 128-bit intermediates is comfortably overflow-free.
class Rational
{
  public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {} // NOLINT: implicit by design
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator-() const { return Rational(-num_, den_); }
    Rational operator+(const Rational &o) const;
    Rational operator-(const Rational &o) const;
    Rational operator*(const Rational &o) const;
    Rational operator/(const Rational &o) const;

    bool operator==(const Rational &o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational &o) const { return !(*this == o); }
    bool operator<(const Rational &o) const;
    bool operator<=(const Rational &o) const { return *this < o || *this == o; }
    bool operator>(const Rational &o) const { return o < *this; }
    bool operator>=(const Rational &o) const { return o <= *this; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // Canonical serialization: "num/den" in lowest terms ("8/3", "4/1").
    std::string to_string() const;

  private:
    std::int64_t num_;
    std::int64_t den_;
    void normalize();
};

Rational min(const Rational &a, const Rational &b);

} // namespace compdof

#endif

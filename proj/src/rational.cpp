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

#include "compdof/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace compdof
{

using i128 = __int128;

static std::int64_t narrow(i128 v)
{
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error("Rational: 64-bit overflow");
    return static_cast<std::int64_t>(v);
}

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den)
{
    if (den_ == 0)
        throw std::invalid_argument("Rational: zero denominator");
    normalize();
}

void Rational::normalize()
{
    if (den_ < 0)
    {
        num_ = -num_;
        den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1)
    {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0)
        den_ = 1;
}

Rational Rational::operator+(const Rational &o) const
{
    i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
    i128 d = i128(den_) * o.den_;
    // reduce in 128 bits before narrowing
    i128 a = n < 0 ? -n : n, b = d;
    while (b != 0)
    {
        i128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1)
    {
        n /= a;
        d /= a;
    }
    return Rational(narrow(n), narrow(d));
}

Rational Rational::operator-(const Rational &o) const { return *this + (-o); }

Rational Rational::operator*(const Rational &o) const
{
    i128 n = i128(num_) * o.num_;
    i128 d = i128(den_) * o.den_;
    i128 a = n < 0 ? -n : n, b = d;
    while (b != 0)
    {
        i128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1)
    {
        n /= a;
        d /= a;
    }
    return Rational(narrow(n), narrow(d));
}

Rational Rational::operator/(const Rational &o) const
{
    if (o.num_ == 0)
        throw std::invalid_argument("Rational: division by zero");
    return *this * Rational(o.den_, o.num_);
}

bool Rational::operator<(const Rational &o) const
{
    return i128(num_) * o.den_ < i128(o.num_) * den_;
}

std::string Rational::to_string() const
{
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational min(const Rational &a, const Rational &b) { return a < b ? a : b; }

} // namespace compdof

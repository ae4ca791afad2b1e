#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace nakalg {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown when a mathematically proven identity fails at runtime.  This is the
// falsification channel: it always carries enough context to reproduce.
class TheoremViolation : public std::logic_error {
public:
    explicit TheoremViolation(const std::string& what) : std::logic_error(what) {}
};

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int to_int(const Rat& q) {
    if (!is_integer(q)) throw std::invalid_argument("rational is not an integer: " + q.get_str());
    return q.get_num();
}

}  // namespace nakalg

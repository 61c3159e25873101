#include "tokenalg/rational.hpp"

namespace tokenalg {

Rat rat_of(long num, long den) {
    if (den == 0) throw InputError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat rat_from_string(const std::string& text) {
    if (text.empty()) throw InputError("empty rational literal");
    Rat r;
    if (r.set_str(text, 10) != 0)
        throw InputError("malformed rational literal: '" + text + "'");
    if (r.get_den() == 0)
        throw InputError("rational with zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& value) { return value.get_str(); }

double rat_to_double(const Rat& value) { return value.get_d(); }

bool rat_is_integer(const Rat& value) { return value.get_den() == 1; }

}  // namespace tokenalg

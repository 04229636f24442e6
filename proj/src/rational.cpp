#include "tfvs/rational.hpp"

#include <cctype>
#include <sstream>

#include "tfvs/errors.hpp"

namespace tfvs {

std::string to_string(const Rational& value) {
    std::ostringstream out;
    out << value; // GMP prints "p" for integers, "p/q" otherwise
    return out.str();
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rational parse_rational(const std::string& token) {
    std::string num = token;
    std::string den = "1";
    auto slash = token.find('/');
    if (slash != std::string::npos) {
        num = token.substr(0, slash);
        den = token.substr(slash + 1);
    }
    bool negative = false;
    if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
        negative = num[0] == '-';
        num = num.substr(1);
    }
    if (!all_digits(num) || !all_digits(den)) {
        throw PreconditionError("malformed rational '" + token + "'");
    }
    boost::multiprecision::mpz_int p(num);
    boost::multiprecision::mpz_int q(den);
    if (q == 0) {
        throw PreconditionError("zero denominator in rational '" + token + "'");
    }
    if (negative) p = -p;
    return Rational(p, q);
}

} // namespace tfvs

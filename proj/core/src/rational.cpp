#include "hyperflex/rational.hpp"

#include <ostream>

namespace hyperflex {

Rat Rat::parse(std::string_view s) {
    if (s.empty()) throw input_error("Rat::parse: empty string");
    std::string str(s);
    try {
        mpq_class q(str, 10);
        q.canonicalize();
        if (q.get_den() == 0) throw input_error("Rat::parse: zero denominator in '" + str + "'");
        return Rat(std::move(q));
    } catch (const std::invalid_argument&) {
        throw input_error("Rat::parse: malformed rational '" + str + "'");
    }
}

Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    if (is_zero()) {
        if (e < 0) throw computation_error("Rat::pow: zero to negative power");
        return Rat(0);
    }
    Rat base = e < 0 ? inv() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.q_.get_num().get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), base.q_.get_den().get_mpz_t(), n);
    return Rat(num, den);
}

std::optional<Rat> Rat::sqrt_exact() const {
    if (sign() < 0) return std::nullopt;
    if (is_zero()) return Rat(0);
    mpz_class n = q_.get_num(), d = q_.get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rat(rn, rd);
}

std::string Rat::str() const {
    return q_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.q_;
}

Rat pow2_at_least(const Rat& r) {
    if (r.sign() <= 0) throw input_error("pow2_at_least: needs positive input");
    Rat p(1);
    if (r <= p) {
        while (p / Rat(2) >= r) p /= Rat(2);
        return p;
    }
    while (p < r) p *= Rat(2);
    return p;
}

} // namespace hyperflex

#include "amideal/rat.hpp"

#include <cctype>

namespace amideal {

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw BadParams("empty rational literal");
    std::size_t slash = text.find('/');
    auto check_int = [&](const std::string& part) {
        if (part.empty()) throw BadParams("bad rational literal: " + text);
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw BadParams("bad rational literal: " + text);
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw BadParams("bad rational literal: " + text);
    };
    if (slash == std::string::npos) {
        check_int(text);
        return Rat(Int(text));
    }
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    check_int(num);
    check_int(den);
    Int d(den);
    if (d == 0) throw BadParams("zero denominator: " + text);
    Rat q(Int(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }

std::string to_decimal_string(const Rat& q, int digits) {
    if (digits < 0) throw BadParams("negative digit count");
    bool neg = q < 0;
    Rat a = rat_abs(q);
    // round(a * 10^digits) via floor(x + 1/2)
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rat scaled = a * Rat(scale) + Rat(1, 2);
    Int m = floor_rat(scaled);
    std::string s = m.get_str();
    if (digits == 0) return (neg && m != 0 ? "-" : "") + s;
    if (s.size() <= static_cast<std::size_t>(digits))
        s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    return (neg && m != 0 ? "-" : "") + s;
}

Rat pow_int(const Rat& q, long e) {
    if (e == 0) return Rat(1);
    bool inv = e < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (inv && q == 0) throw BadParams("zero base with negative exponent");
    Int n, d;
    mpz_pow_ui(n.get_mpz_t(), q.get_num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), q.get_den().get_mpz_t(), k);
    Rat r = inv ? Rat(d, n) : Rat(n, d);
    r.canonicalize();
    return r;
}

Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Int factorial(Index n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Index ceil_sqrt(Index n) {
    if (n == 0) return 0;
    Int m(static_cast<unsigned long>(n - 1)), r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    return static_cast<Index>(r.get_ui()) + 1;
}

}  // namespace amideal

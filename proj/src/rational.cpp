#include "qstein/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace qstein {

double to_double(const Rational& x) { return x.get_d(); }

std::string rational_str(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

std::size_t skip_ws(const std::string& s, std::size_t p) {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    return p;
}

// [sign] digits [ "/" digits ]
Rational parse_rational_at(const std::string& s, std::size_t& p) {
    p = skip_ws(s, p);
    std::size_t start = p;
    if (p < s.size() && (s[p] == '+' || s[p] == '-')) ++p;
    std::size_t digits = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (p == digits) throw SyntaxError(start, "integer");
    std::string num = s.substr(start, p - start);
    std::string den = "1";
    if (p < s.size() && s[p] == '/') {
        ++p;
        std::size_t dstart = p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (p == dstart) throw SyntaxError(dstart, "positive denominator");
        den = s.substr(dstart, p - dstart);
    }
    Rational r(Integer(num), Integer(den));
    r.canonicalize();
    return r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::size_t p = 0;
    Rational r = parse_rational_at(text, p);
    p = skip_ws(text, p);
    if (p != text.size()) throw SyntaxError(p, "end of input");
    return r;
}

std::optional<Rational> exact_sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    if (x == 0) return Rational(0);
    Integer num_root, den_root;
    if (mpz_perfect_square_p(x.get_num().get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(x.get_den().get_mpz_t()) == 0) return std::nullopt;
    mpz_sqrt(num_root.get_mpz_t(), x.get_num().get_mpz_t());
    mpz_sqrt(den_root.get_mpz_t(), x.get_den().get_mpz_t());
    return Rational(num_root, den_root);
}

double GaussianRational::abs() const {
    if (auto r = abs_exact()) return to_double(*r);
    return std::sqrt(to_double(abs_sq()));
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw ZeroParameter("inverse of zero in Q(i)");
    Rational n = abs_sq();
    return GaussianRational(re_ / n, -im_ / n);
}

GaussianRational GaussianRational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    GaussianRational acc(1);
    GaussianRational base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1u) acc *= base;
        base *= base;
        k >>= 1u;
    }
    return acc;
}

std::string GaussianRational::str() const {
    if (im_ == 0) return rational_str(re_);
    std::string imag = rational_str(im_ < 0 ? Rational(-im_) : im_) + "*i";
    if (re_ == 0) return (im_ < 0 ? "-" : "") + imag;
    return rational_str(re_) + (im_ < 0 ? "-" : "+") + imag;
}

GaussianRational GaussianRational::parse(const std::string& text) {
    std::size_t p = skip_ws(text, 0);
    if (p == text.size()) throw SyntaxError(p, "scalar");

    auto parse_part = [&](bool& is_imag) -> Rational {
        // Either "i" / "+i" / "-i", or rational optionally followed by "*i".
        std::size_t q = skip_ws(text, p);
        int sign = 1;
        std::size_t after_sign = q;
        if (q < text.size() && (text[q] == '+' || text[q] == '-')) {
            sign = text[q] == '-' ? -1 : 1;
            after_sign = q + 1;
        }
        std::size_t r = skip_ws(text, after_sign);
        if (r < text.size() && text[r] == 'i') {
            p = r + 1;
            is_imag = true;
            return Rational(sign);
        }
        Rational value = parse_rational_at(text, p);
        is_imag = false;
        std::size_t s = skip_ws(text, p);
        if (s < text.size() && text[s] == '*') {
            std::size_t t = skip_ws(text, s + 1);
            if (t >= text.size() || text[t] != 'i') throw SyntaxError(t, "'i' after '*'");
            p = t + 1;
            is_imag = true;
        }
        return value;
    };

    Rational re(0), im(0);
    bool got_re = false, got_im = false;
    bool is_imag = false;
    Rational first = parse_part(is_imag);
    if (is_imag) {
        im = first;
        got_im = true;
    } else {
        re = first;
        got_re = true;
    }
    p = skip_ws(text, p);
    if (p < text.size()) {
        if (text[p] != '+' && text[p] != '-') throw SyntaxError(p, "'+', '-' or end of scalar");
        Rational second = parse_part(is_imag);
        if (is_imag) {
            if (got_im) throw SyntaxError(p, "real part (imaginary part already given)");
            im = second;
        } else {
            if (got_re) throw SyntaxError(p, "imaginary part (real part already given)");
            re = second;
        }
        p = skip_ws(text, p);
    }
    if (p != text.size()) throw SyntaxError(p, "end of scalar");
    (void)got_re;
    return GaussianRational(re, im);
}

std::string modulus_class_name(ModulusClass c) {
    switch (c) {
        case ModulusClass::LessThanOne: return "LessThanOne";
        case ModulusClass::EqualOne: return "EqualOne";
        case ModulusClass::GreaterThanOne: return "GreaterThanOne";
    }
    return "?";
}

ModulusClass classify_modulus(const GaussianRational& q) {
    if (q.is_zero()) throw ZeroParameter("deformation parameter q must be nonzero");
    Rational a = q.abs_sq();
    if (a < 1) return ModulusClass::LessThanOne;
    if (a == 1) return ModulusClass::EqualOne;
    return ModulusClass::GreaterThanOne;
}

}  // namespace qstein

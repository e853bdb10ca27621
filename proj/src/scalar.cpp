#include "kshadow/scalar.h"

#include <cctype>

namespace kshadow {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

std::optional<Scalar> Scalar::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    bool neg = false;
    if (text[0] == '+' || text[0] == '-') {
        neg = text[0] == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) return std::nullopt;

    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return std::nullopt;
        mpz_class n(std::string(num), 10), d(std::string(den), 10);
        if (d == 0) return std::nullopt;
        mpq_class q(n, d);
        q.canonicalize();
        if (neg) q = -q;
        return Scalar(std::move(q));
    }

    auto dot = text.find('.');
    if (dot != std::string_view::npos) {
        std::string_view ip = text.substr(0, dot);
        std::string_view fp = text.substr(dot + 1);
        if (ip.empty() && fp.empty()) return std::nullopt;
        if (!ip.empty() && !all_digits(ip)) return std::nullopt;
        if (!fp.empty() && !all_digits(fp)) return std::nullopt;
        mpz_class n = ip.empty() ? mpz_class(0) : mpz_class(std::string(ip), 10);
        mpz_class d(1);
        for (char c : fp) {
            n = n * 10 + (c - '0');
            d *= 10;
        }
        mpq_class q(n, d);
        q.canonicalize();
        if (neg) q = -q;
        return Scalar(std::move(q));
    }

    if (!all_digits(text)) return std::nullopt;
    mpq_class q(mpz_class(std::string(text), 10));
    if (neg) q = -q;
    return Scalar(std::move(q));
}

std::string Scalar::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Scalar::decimal(int digits) const {
    mpz_class scale(1);
    for (int i = 0; i < digits; ++i) scale *= 10;
    mpz_class num = numerator() * scale * 2;
    mpz_class den = denominator() * 2;
    // round half away from zero
    mpz_class adj = num;
    if (num >= 0) adj += denominator(); else adj -= denominator();
    mpz_class q = adj / den;  // truncation toward zero matches away-rounding here
    bool neg = q < 0;
    mpz_class a = neg ? mpz_class(-q) : q;
    std::string ds = a.get_str();
    std::string out;
    if (digits == 0) {
        out = ds;
    } else {
        while (ds.size() <= static_cast<size_t>(digits)) ds.insert(ds.begin(), '0');
        out = ds.substr(0, ds.size() - digits) + "." + ds.substr(ds.size() - digits);
        // trim trailing zeros but keep at least one digit after the point
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    if (neg && out != "0") out.insert(out.begin(), '-');
    return out;
}

}  // namespace kshadow

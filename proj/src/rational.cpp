#include "hd/rational.hpp"

#include <cassert>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>

#include "hd/errors.hpp"

namespace hd {

std::size_t bit_size(const mpz_class& z) {
    return mpz_sizeinbase(z.get_mpz_t(), 2);
}

std::size_t bit_size(const rat& q) {
    return bit_size(q.get_num()) + bit_size(q.get_den());
}

rat make_rat(long long num, long long den) {
    mpz_class zn, zd;
    mpz_set_si(zn.get_mpz_t(), num);
    mpz_set_si(zd.get_mpz_t(), den);
    rat q(zn, zd);
    q.canonicalize();
    return q;
}

namespace {

bool is_plain_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

rat parse_rat(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw parse_error("empty rational literal");

    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!is_plain_integer(num) || !is_plain_integer(den))
            throw parse_error("bad rational literal: " + text);
        mpz_class zn(num), zd(den);
        rat q(zn, zd);
        if (q.get_den() == 0) throw parse_error("zero denominator: " + text);
        q.canonicalize();
        return q;
    }

    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (!ip.empty() && (ip[0] == '+' || ip[0] == '-')) ip = ip.substr(1);
        if (ip.empty() && fp.empty()) throw parse_error("bad decimal literal: " + text);
        for (char c : ip + fp)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw parse_error("bad decimal literal: " + text);
        mpz_class scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        mpz_class whole = ip.empty() ? mpz_class(0) : mpz_class(ip);
        mpz_class frac = fp.empty() ? mpz_class(0) : mpz_class(fp);
        rat q(whole * scale + frac, scale);
        q.canonicalize();
        if (neg) q = -q;
        return q;
    }

    if (!is_plain_integer(s)) throw parse_error("bad rational literal: " + text);
    return rat(mpz_class(s));
}

std::string to_string(const rat& q) {
    rat c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double to_double(const rat& q) { return q.get_d(); }

rat simplest_in_interval(const rat& lo, const rat& hi) {
    assert(lo <= hi);
    if (lo <= 0 && 0 <= hi) return rat(0);
    if (hi < 0) return -simplest_in_interval(-hi, -lo);

    // 0 < lo <= hi. Smallest integer in range wins; otherwise descend the
    // Stern-Brocot tree through the shared integer part.
    mpz_class cl;
    mpz_cdiv_q(cl.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    if (rat(cl) <= hi) return rat(cl);
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    rat inner = simplest_in_interval(1 / (hi - rat(fl)), 1 / (lo - rat(fl)));
    rat r = rat(fl) + 1 / inner;
    r.canonicalize();
    return r;
}

std::optional<rat> snap_to_rational(double v, double max_err, unsigned long max_den) {
    if (!std::isfinite(v)) return std::nullopt;
    rat lo = parse_rat(format_double(v - max_err));
    rat hi = parse_rat(format_double(v + max_err));
    if (lo > hi) std::swap(lo, hi);
    rat cand = simplest_in_interval(lo, hi);
    if (cand.get_den() > max_den) return std::nullopt;
    return cand;
}

}  // namespace hd

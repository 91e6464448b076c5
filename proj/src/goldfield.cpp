#include "icotile/goldfield.hpp"

#include <cmath>
#include <ostream>

namespace icotile {

GoldenRational::GoldenRational(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
}

GoldenRational GoldenRational::parse(std::string_view text) {
    std::string s(text);
    auto bad = [&]() { return std::invalid_argument("malformed golden number: '" + std::string(text) + "'"); };
    if (s.empty()) throw bad();
    // ASCII spelling
    if (s.size() >= 3 && s.compare(s.size() - 3, 3, "phi") == 0) s = s.substr(0, s.size() - 3) + "φ";

    static const std::string kPhiUtf8 = "φ";
    const bool has_phi = s.size() >= kPhiUtf8.size() &&
                         s.compare(s.size() - kPhiUtf8.size(), kPhiUtf8.size(), kPhiUtf8) == 0;
    auto parse_q = [&](const std::string& part) {
        mpq_class q;
        if (part.empty() || q.set_str(part, 10) != 0) throw bad();
        q.canonicalize();
        return q;
    };
    if (!has_phi) return {parse_q(s), mpq_class(0)};

    std::string body = s.substr(0, s.size() - kPhiUtf8.size());
    // split at the last +/- that is not the leading sign
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if (body[i] == '+' || body[i] == '-') {
            split = i;
            break;
        }
    }
    // a bare phi coefficient means 1 (or -1)
    auto unit_or = [&](const std::string& part) {
        if (part.empty() || part == "+") return mpq_class(1);
        if (part == "-") return mpq_class(-1);
        return parse_q(part);
    };
    if (split == std::string::npos) return {mpq_class(0), unit_or(body)};
    std::string a = body.substr(0, split);
    std::string b = body.substr(body[split] == '+' ? split + 1 : split);
    return {parse_q(a), unit_or(b)};
}

GoldenRational GoldenRational::conjugate() const { return {a_ + b_, -b_}; }

int GoldenRational::sign() const {
    // x = (s + b*sqrt5) / 2 with s = 2a + b
    const mpq_class s = 2 * a_ + b_;
    const int ss = sgn(s);
    const int sb = sgn(b_);
    if (ss >= 0 && sb >= 0) return (ss > 0 || sb > 0) ? 1 : 0;
    if (ss <= 0 && sb <= 0) return -1;
    const int d = sgn(mpq_class(s * s - 5 * b_ * b_));
    return ss > 0 ? d : -d;
}

mpq_class GoldenRational::norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

GoldenRational GoldenRational::inverse() const {
    const mpq_class n = norm();
    if (sgn(n) == 0) throw std::domain_error("inverse of zero in Q(phi)");
    GoldenRational c = conjugate();
    return {c.a_ / n, c.b_ / n};
}

double GoldenRational::to_double() const { return a_.get_d() + b_.get_d() * kPhi; }

std::string GoldenRational::str() const {
    std::string out = a_.get_str();
    if (sgn(b_) < 0) {
        out += "-";
        out += mpq_class(-b_).get_str();
    } else {
        out += "+";
        out += b_.get_str();
    }
    out += "φ";
    return out;
}

GoldenRational& GoldenRational::operator+=(const GoldenRational& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

GoldenRational& GoldenRational::operator-=(const GoldenRational& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

GoldenRational& GoldenRational::operator*=(const GoldenRational& o) {
    // phi^2 = phi + 1
    mpq_class bb = b_ * o.b_;
    mpq_class na = a_ * o.a_ + bb;
    mpq_class nb = a_ * o.b_ + b_ * o.a_ + bb;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

GoldenRational& GoldenRational::operator/=(const GoldenRational& o) { return *this *= o.inverse(); }

std::ostream& operator<<(std::ostream& os, const GoldenRational& x) { return os << x.str(); }

GoldenVec3 cross(const GoldenVec3& x, const GoldenVec3& y) {
    return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

GoldenRational det3(const GoldenVec3& c0, const GoldenVec3& c1, const GoldenVec3& c2) {
    return dot(c0, cross(c1, c2));
}

}  // namespace icotile

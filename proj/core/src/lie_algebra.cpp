#include "cga/lie_algebra.hpp"

#include <stdexcept>

namespace cga {

HalfInt::HalfInt(long twice) : twice_(twice) {
    if (twice < 1 || twice % 2 == 0) {
        throw std::invalid_argument("l must be a positive half-integer (2l odd, got 2l = " +
                                    std::to_string(twice) + ")");
    }
}

HalfInt HalfInt::parse(std::string_view text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos || text.substr(slash + 1) != "2") {
        throw std::invalid_argument("l must be written as an odd numerator over 2, e.g. \"3/2\" (got \"" +
                                    std::string(text) + "\")");
    }
    const std::string num(text.substr(0, slash));
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("invalid half-integer \"" + std::string(text) + "\"");
    }
    try {
        return HalfInt(std::stol(num));
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("half-integer \"" + std::string(text) + "\" is out of range");
    }
}

std::string HalfInt::str() const { return std::to_string(twice_) + "/2"; }

BasisLabel BasisLabel::parse(std::string_view text) {
    if (text == "e") return e();
    if (text == "h") return h();
    if (text == "f") return f();
    if (text == "z") return z();
    if (text.size() >= 2 && text[0] == 'p' &&
        text.find_first_not_of("0123456789", 1) == std::string_view::npos) {
        try {
            return p(std::stol(std::string(text.substr(1))));
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("basis index in \"" + std::string(text) + "\" is out of range");
        }
    }
    throw std::invalid_argument("unknown basis label \"" + std::string(text) + "\"");
}

std::string BasisLabel::str() const {
    switch (tag) {
        case Tag::E: return "e";
        case Tag::H: return "h";
        case Tag::F: return "f";
        case Tag::P: return "p" + std::to_string(index);
        case Tag::Z: return "z";
    }
    return "?";
}

Element::Element(const LieAlgebra& algebra, Vec coords) : algebra_(&algebra), coords_(std::move(coords)) {
    if (coords_.size() != algebra_->dim()) {
        throw std::invalid_argument("element coordinate count does not match algebra dimension");
    }
}

std::string Element::key() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += coords_[i].str();
    }
    return out;
}

std::string Element::str() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        const Rational& c = coords_[i];
        if (c.is_zero()) {
            continue;
        }
        const std::string label = algebra_->basis()[i].str();
        if (out.empty()) {
            if (c.is_one()) {
                out = label;
            } else if (c == Rational(-1)) {
                out = "-" + label;
            } else {
                out = c.str() + " " + label;
            }
        } else {
            const Rational mag = c.sign() < 0 ? -c : c;
            out += c.sign() < 0 ? " - " : " + ";
            out += mag.is_one() ? label : mag.str() + " " + label;
        }
    }
    return out.empty() ? "0" : out;
}

namespace {

void require_same_algebra(const Element& a, const Element& b) {
    if (&a.algebra() != &b.algebra()) {
        throw std::invalid_argument("elements belong to different algebras");
    }
}

}  // namespace

Element Element::operator-() const {
    Vec c = coords_;
    for (auto& x : c) {
        x = -x;
    }
    return Element(*algebra_, std::move(c));
}

Element operator+(Element a, const Element& b) {
    require_same_algebra(a, b);
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
        a.coords_[i] += b.coords_[i];
    }
    return a;
}

Element operator-(Element a, const Element& b) {
    require_same_algebra(a, b);
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
        a.coords_[i] -= b.coords_[i];
    }
    return a;
}

Element operator*(const Rational& s, Element a) {
    for (auto& x : a.coords_) {
        x *= s;
    }
    return a;
}

bool operator==(const Element& a, const Element& b) {
    return &a.algebra() == &b.algebra() && a.coords_ == b.coords_;
}

LieAlgebra LieAlgebra::conformal_galilei(HalfInt l) {
    const long tw = l.twice();  // 2l
    LieAlgebra g;
    g.l_ = l;
    g.basis_.push_back(BasisLabel::e());
    g.basis_.push_back(BasisLabel::h());
    g.basis_.push_back(BasisLabel::f());
    for (long k = 0; k <= tw; ++k) {
        g.basis_.push_back(BasisLabel::p(k));
    }
    g.basis_.push_back(BasisLabel::z());

    const std::size_t E = 0, H = 1, F = 2;
    const std::size_t Z = g.basis_.size() - 1;
    auto P = [](long k) { return static_cast<std::size_t>(3 + k); };

    auto add = [&g](std::size_t i, std::size_t j, std::size_t target, Rational coeff) {
        if (coeff.is_zero()) {
            return;
        }
        if (i > j) {
            std::swap(i, j);
            coeff = -coeff;
        }
        g.table_[{i, j}][target] = std::move(coeff);
    };

    add(H, E, E, 2);
    add(H, F, F, -2);
    add(E, F, H, 1);
    for (long k = 0; k <= tw; ++k) {
        add(H, P(k), P(k), Rational(tw - 2 * k));       // [h,p_k] = 2(l-k) p_k
        if (k >= 1) {
            add(E, P(k), P(k - 1), Rational(k));        // [e,p_k] = k p_{k-1}
        }
        if (k < tw) {
            add(F, P(k), P(k + 1), Rational(tw - k));   // [f,p_k] = (2l-k) p_{k+1}
        }
    }
    // [p_k, p_{2l-k}] = (-1)^{k+l+1/2} k! (2l-k)! z; the exponent k+l+1/2 is
    // the integer k + (2l+1)/2. 2l odd means k and 2l-k never coincide.
    for (long k = 0; 2 * k < tw; ++k) {
        Rational coeff = factorial(k) * factorial(tw - k);
        if ((k + (tw + 1) / 2) % 2 != 0) {
            coeff = -coeff;
        }
        add(P(k), P(tw - k), Z, std::move(coeff));
    }

    g.sl2_part_ = {E, H, F};
    for (std::size_t i = 3; i < g.basis_.size(); ++i) {
        g.heis_part_.push_back(i);
    }
    return g;
}

LieAlgebra LieAlgebra::from_table(std::vector<BasisLabel> basis, BracketTable table) {
    LieAlgebra g;
    g.basis_ = std::move(basis);
    const std::size_t n = g.basis_.size();
    for (auto& [key, coeffs] : table) {
        if (key.first >= key.second || key.second >= n) {
            throw std::invalid_argument("bracket table keys must satisfy i < j < dim");
        }
        SparseVec cleaned;
        for (auto& [target, coeff] : coeffs) {
            if (target >= n) {
                throw std::invalid_argument("bracket coefficient index out of range");
            }
            if (!coeff.is_zero()) {
                cleaned.emplace(target, coeff);
            }
        }
        if (!cleaned.empty()) {
            g.table_[key] = std::move(cleaned);
        }
    }
    return g;
}

std::size_t LieAlgebra::index_of(const BasisLabel& label) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i] == label) {
            return i;
        }
    }
    throw std::invalid_argument("basis label " + label.str() + " not present in this algebra");
}

Element LieAlgebra::basis_element(std::size_t i) const {
    if (i >= dim()) {
        throw std::invalid_argument("basis index out of range");
    }
    return Element(*this, unit_vec(dim(), i));
}

Element LieAlgebra::element(Vec coords) const { return Element(*this, std::move(coords)); }

Element LieAlgebra::zero() const { return Element(*this, Vec(dim())); }

Element LieAlgebra::bracket(const Element& x, const Element& y) const {
    if (&x.algebra() != this || &y.algebra() != this) {
        throw std::invalid_argument("bracket arguments belong to a different algebra");
    }
    Vec out(dim());
    for (const auto& [key, coeffs] : table_) {
        const auto [i, j] = key;
        // bilinearity + antisymmetry: coefficient x_i y_j - x_j y_i on [b_i,b_j]
        const Rational c = x.coords()[i] * y.coords()[j] - x.coords()[j] * y.coords()[i];
        if (c.is_zero()) {
            continue;
        }
        for (const auto& [target, s] : coeffs) {
            out[target] += c * s;
        }
    }
    return Element(*this, std::move(out));
}

RationalMatrix LieAlgebra::ad(const Element& x) const {
    if (&x.algebra() != this) {
        throw std::invalid_argument("ad argument belongs to a different algebra");
    }
    RationalMatrix m(dim(), dim());
    for (const auto& [key, coeffs] : table_) {
        const auto [i, j] = key;
        for (const auto& [target, s] : coeffs) {
            if (!x.coords()[i].is_zero()) {
                m(target, j) += x.coords()[i] * s;  // x_i [b_i, b_j]
            }
            if (!x.coords()[j].is_zero()) {
                m(target, i) -= x.coords()[j] * s;  // x_j [b_j, b_i]
            }
        }
    }
    return m;
}

Subspace LieAlgebra::center() const {
    const std::size_t n = dim();
    // x central iff [x, b_j] = 0 for all j: one row per (j, component).
    RationalMatrix m(n * n, n);
    for (const auto& [key, coeffs] : table_) {
        const auto [i, j] = key;
        for (const auto& [target, s] : coeffs) {
            m(j * n + target, i) += s;
            m(i * n + target, j) -= s;
        }
    }
    return kernel(std::move(m));
}

JacobiReport LieAlgebra::jacobi_defect() const {
    JacobiReport report;
    const std::size_t n = dim();
    std::vector<Element> b;
    b.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        b.push_back(basis_element(i));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                Element defect = bracket(bracket(b[i], b[j]), b[k]) +
                                 bracket(bracket(b[j], b[k]), b[i]) +
                                 bracket(bracket(b[k], b[i]), b[j]);
                ++report.triples_checked;
                if (!defect.is_zero()) {
                    report.violations.push_back({i, j, k, defect.coords()});
                }
            }
        }
    }
    return report;
}

}  // namespace cga

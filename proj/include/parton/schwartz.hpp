#pragma once

#include "padic.hpp"

namespace parton {

struct DivergentIntegral : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Measure { additive, multiplicative };

// Locally constant compactly supported function on Q_p: finitely many
// disjoint (ball, value) pieces.  All integrals are finite ball sums plus
// closed-form geometric tails at the origin, so they are exact up to float
// rounding.
class SchwartzFunction {
public:
    struct Piece {
        Ball ball;
        cplx value;
    };

    explicit SchwartzFunction(long long prime) : p_(prime) {}
    SchwartzFunction(long long prime, std::vector<Piece> pieces)
        : p_(prime), pieces_(std::move(pieces)) {
        for (auto& pc : pieces_) pc.ball.canonicalize();
        check_disjoint();
    }

    long long prime() const { return p_; }
    const std::vector<Piece>& pieces() const { return pieces_; }
    bool empty() const { return pieces_.empty(); }

    // smallest exponent R with support inside {|x - c| <= p^R} for the
    // enclosing ball; for origin-centered supports this is the support_exponent
    Ball enclosing_ball() const {
        if (pieces_.empty()) return Ball::make(p_, PExp::zero(), 0);
        Ball u = pieces_.front().ball;
        for (size_t i = 1; i < pieces_.size(); ++i) {
            const Ball& b = pieces_[i].ball;
            int d = distance_exponent(p_, u.center, b.center);
            int r = std::max({u.radius_exp, b.radius_exp, d});
            u = Ball::make(p_, u.center, r);
        }
        return u;
    }
    int support_exponent() const { return enclosing_ball().radius_exp; }

    cplx evaluate(const PExp& x) const {
        for (const auto& pc : pieces_)
            if (pc.ball.contains_point(x)) return pc.value;
        return {0.0, 0.0};
    }
    cplx evaluate(const PadicNumber& x) const { return evaluate(to_pexp(x)); }

    SchwartzFunction scaled(cplx a) const {
        SchwartzFunction g(p_);
        g.pieces_ = pieces_;
        for (auto& pc : g.pieces_) pc.value *= a;
        return g;
    }

    // x -> f(p^k x); norms on the support scale by p^{+k}
    SchwartzFunction argument_scaled_by_power(int k) const {
        SchwartzFunction g(p_);
        g.pieces_.reserve(pieces_.size());
        for (const auto& pc : pieces_)
            g.pieces_.push_back({Ball::make(p_, pc.ball.center.mul_pow(p_, -k),
                                            pc.ball.radius_exp + k),
                                 pc.value});
        return g;
    }

    SchwartzFunction conjugated() const {
        SchwartzFunction g(p_);
        g.pieces_ = pieces_;
        for (auto& pc : g.pieces_) pc.value = std::conj(pc.value);
        return g;
    }

    // split every piece into its p^levels children; values and integrals are
    // unchanged
    SchwartzFunction refined(int levels) const {
        SchwartzFunction g(p_);
        for (const auto& pc : pieces_) {
            std::vector<Ball> cur{pc.ball};
            for (int l = 0; l < levels; ++l) {
                std::vector<Ball> next;
                next.reserve(cur.size() * static_cast<size_t>(p_));
                for (const auto& b : cur)
                    for (auto& c : b.children()) next.push_back(c);
                cur = std::move(next);
            }
            for (const auto& b : cur) g.pieces_.push_back({b, pc.value});
        }
        return g;
    }

    // complete the piece list to an exact tiling of the enclosing ball by
    // adding explicit zero pieces (needed by kernel integrals)
    SchwartzFunction tiled() const {
        if (pieces_.empty()) return *this;
        SchwartzFunction g(p_);
        fill_region(enclosing_ball(), pieces_, g.pieces_);
        return g;
    }

private:
    static void fill_region(const Ball& region, const std::vector<Piece>& pcs,
                            std::vector<Piece>& out) {
        std::vector<const Piece*> inside;
        for (const auto& pc : pcs) {
            auto rel = Ball::relation(region, pc.ball);
            if (rel == Ball::Rel::equal) {
                out.push_back(pc);
                return;
            }
            if (rel == Ball::Rel::first_contains_second) inside.push_back(&pc);
        }
        if (inside.empty()) {
            out.push_back({region, {0.0, 0.0}});
            return;
        }
        if (region.radius_exp < -4096) throw std::runtime_error("tiling recursion too deep");
        for (const auto& child : region.children()) {
            std::vector<Piece> sub;
            for (const Piece* pc : inside) {
                auto rel = Ball::relation(child, pc->ball);
                if (rel != Ball::Rel::disjoint) sub.push_back(*pc);
            }
            fill_region(child, sub, out);
        }
    }

    void check_disjoint() const {
        for (size_t i = 0; i < pieces_.size(); ++i)
            for (size_t j = i + 1; j < pieces_.size(); ++j)
                if (Ball::relation(pieces_[i].ball, pieces_[j].ball) != Ball::Rel::disjoint)
                    throw std::invalid_argument("SchwartzFunction pieces must be disjoint");
    }

    long long p_;
    std::vector<Piece> pieces_;
};

// integral of |x|^w over one ball under the chosen measure, as an exact
// finite/geometric sum
inline double ball_weight_integral(const Ball& b, Measure m, double w) {
    long long p = b.p;
    if (!b.contains_zero()) {
        double xnorm = b.center.norm(p);  // |x| constant on the ball
        double mu = (m == Measure::additive) ? dpow(p, b.radius_exp)
                                             : dpow(p, b.radius_exp) / xnorm;
        return std::pow(xnorm, w) * mu;
    }
    // shells |x| = p^r, r <= radius_exp: additive shell measure p^r(1-1/p),
    // multiplicative shell measure (1-1/p)
    double eff = (m == Measure::additive) ? w + 1.0 : w;
    if (eff <= 0.0)
        throw DivergentIntegral("weighted measure of a ball containing 0 diverges");
    double head = dpow(p, b.radius_exp * eff);
    return (1.0 - 1.0 / p) * head / (1.0 - dpow(p, -eff));
}

inline cplx integrate(const SchwartzFunction& f, Measure m, double weight_exponent = 0.0) {
    cplx total = 0.0;
    for (const auto& pc : f.pieces()) {
        if (pc.value == cplx{0.0, 0.0}) continue;
        total += pc.value * ball_weight_integral(pc.ball, m, weight_exponent);
    }
    return total;
}

// <f,g> = integral of conj(f) g |x|^w under the measure; conjugate-linear in
// the first slot.  Overlapping pieces are nested, so each intersection is the
// smaller ball and both functions are constant there.
inline cplx inner_product(const SchwartzFunction& f, const SchwartzFunction& g, Measure m,
                          double weight_exponent = 0.0) {
    if (f.prime() != g.prime()) throw PrimeMismatch("inner_product: prime mismatch");
    cplx total = 0.0;
    for (const auto& pf : f.pieces()) {
        for (const auto& pg : g.pieces()) {
            auto rel = Ball::relation(pf.ball, pg.ball);
            if (rel == Ball::Rel::disjoint) continue;
            const Ball& small = (rel == Ball::Rel::first_contains_second) ? pg.ball : pf.ball;
            total += std::conj(pf.value) * pg.value * ball_weight_integral(small, m, weight_exponent);
        }
    }
    return total;
}

struct PieceRecord {
    std::string center;
    int radius_exp;
    double re, im;
};

inline std::vector<PieceRecord> to_records(const SchwartzFunction& f) {
    std::vector<PieceRecord> rows;
    rows.reserve(f.pieces().size());
    for (const auto& pc : f.pieces()) {
        std::string ctext = "0";
        if (!pc.ball.center.is_zero()) {
            const PExp& c = pc.ball.center;
            int ndig = 0;
            for (long long u = c.unit; u != 0; u /= f.prime()) ++ndig;
            ctext = format_qp(to_padic(f.prime(), c, std::max(1, ndig)));
        }
        rows.push_back({ctext, pc.ball.radius_exp, pc.value.real(), pc.value.imag()});
    }
    return rows;
}

}  // namespace parton

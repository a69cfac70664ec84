#pragma once

#include <memory>

#include "numutil.hpp"

namespace parton {

// (Z/NZ)^* decomposed into cyclic components with fixed generators; the
// canonical generator choice makes character labels reproducible.
struct UnitGroup {
    long long N = 1;
    struct Component {
        long long modulus;    // prime power q | N
        long long generator;  // generator mod q, lifted to 1 mod N/q
        long long order;
    };
    std::vector<Component> comps;
    long long order_lcm = 1;                 // common order of all character values
    std::vector<std::vector<long long>> dlog;  // per component: residue mod q -> exponent (-1 if none)

    static std::shared_ptr<const UnitGroup> build(long long N) {
        if (N < 1) throw std::invalid_argument("modulus must be positive");
        auto g = std::make_shared<UnitGroup>();
        g->N = N;
        for (auto [p, e] : factorize(N)) {
            long long q = ipow(p, e);
            if (p == 2) {
                if (e == 1) continue;  // trivial factor
                if (e == 2) {
                    g->add_component(q, 3);
                } else {
                    g->add_two_power_components(q);  // <-1> x <5>
                }
            } else {
                g->add_component(q, primitive_root(p, q));
            }
        }
        for (const auto& c : g->comps)
            g->order_lcm = g->order_lcm / gcd_ll(g->order_lcm, c.order) * c.order;
        return g;
    }

    long long phi() const {
        long long t = 1;
        for (const auto& c : comps) t *= c.order;
        return t;
    }

    // discrete logs of m in every component; m must be coprime to N
    std::vector<long long> logs(long long m) const {
        std::vector<long long> out(comps.size());
        for (size_t i = 0; i < comps.size(); ++i) {
            long long r = m % comps[i].modulus;
            if (r < 0) r += comps[i].modulus;
            long long l = dlog[i][static_cast<size_t>(r)];
            if (l < 0) throw std::logic_error("residue not generated; group decomposition broken");
            out[i] = l;
        }
        return out;
    }

private:
    void add_component(long long q, long long gen) {
        std::vector<long long> table(static_cast<size_t>(q), -1);
        long long x = gen % q;
        table[1] = 0;
        long long k = 0;
        while (x != 1) {
            table[static_cast<size_t>(x)] = ++k;
            x = x * gen % q;
        }
        comps.push_back({q, gen, k + 1});
        dlog.push_back(std::move(table));
    }

    // (Z/2^e)^* for e >= 3: every unit is (-1)^a 5^b; component logs are the
    // sign a and the 5-exponent b
    void add_two_power_components(long long q) {
        std::vector<long long> sign(static_cast<size_t>(q), -1);
        std::vector<long long> five(static_cast<size_t>(q), -1);
        long long x = 1, k = 0, order5 = q / 4;
        do {
            sign[static_cast<size_t>(x)] = 0;
            five[static_cast<size_t>(x)] = k;
            sign[static_cast<size_t>(q - x)] = 1;
            five[static_cast<size_t>(q - x)] = k;
            x = x * 5 % q;
            ++k;
        } while (x != 1);
        if (k != order5) throw std::logic_error("unexpected order of 5 mod 2^e");
        comps.push_back({q, q - 1, 2});
        dlog.push_back(std::move(sign));
        comps.push_back({q, 5, order5});
        dlog.push_back(std::move(five));
    }

    static long long primitive_root(long long p, long long q) {
        // smallest primitive root mod p, then lifted to p^e if needed
        long long phi_p = p - 1;
        auto fac = factorize(phi_p);
        auto is_root = [&](long long g, long long mod, long long ord) {
            for (auto [r, e] : factorize(ord)) {
                (void)e;
                long long x = 1, b = g % mod, k = ord / r;
                for (; k; k >>= 1, b = mul(b, b, mod))
                    if (k & 1) x = mul(x, b, mod);
                if (x == 1) return false;
            }
            return true;
        };
        long long g = 2;
        while (!is_root(g, p, phi_p)) ++g;
        if (q == p) return g;
        // g or g+p generates mod p^e
        long long phi_q = q / p * (p - 1);
        if (is_root(g, q, phi_q)) return g;
        return g + p;
    }

    static long long mul(long long a, long long b, long long mod) {
        return static_cast<long long>(static_cast<__int128>(a) * b % mod);
    }
};

// Character mod N held as an exponent vector against the group generators;
// values are exact roots of unity e^{2 pi i t / order_lcm}, floats appear only
// at evaluation.
class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const UnitGroup> g, std::vector<long long> evec,
                       long long label)
        : g_(std::move(g)), evec_(std::move(evec)), label_(label) {
        build_table();
    }

    long long modulus() const { return g_->N; }
    long long label() const { return label_; }
    long long value_order() const { return g_->order_lcm; }
    const std::vector<long long>& exponents() const { return evec_; }

    bool is_principal() const {
        return std::all_of(evec_.begin(), evec_.end(), [](long long e) { return e == 0; });
    }

    // exponent t with chi(m) = e^{2 pi i t / order_lcm}, or -1 when chi(m)=0
    long long value_exponent(long long m) const {
        long long r = m % g_->N;
        if (r < 0) r += g_->N;
        return table_[static_cast<size_t>(r)];
    }

    cplx value(long long m) const {
        long long t = value_exponent(m);
        if (t < 0) return {0.0, 0.0};
        return unit_phase(static_cast<double>(t) / static_cast<double>(g_->order_lcm));
    }

    DirichletCharacter conjugate() const {
        std::vector<long long> e(evec_.size());
        for (size_t i = 0; i < e.size(); ++i)
            e[i] = (g_->comps[i].order - evec_[i]) % g_->comps[i].order;
        // label of the conjugate under the lexicographic enumeration
        long long lab = 0;
        for (size_t i = 0; i < e.size(); ++i) lab = lab * g_->comps[i].order + e[i];
        return DirichletCharacter(g_, std::move(e), lab);
    }

    std::string descriptor() const {
        return std::to_string(modulus()) + ":" + std::to_string(label_);
    }

private:
    void build_table() {
        long long N = g_->N;
        table_.assign(static_cast<size_t>(N == 1 ? 1 : N), -1);
        long long L = g_->order_lcm;
        for (long long m = 0; m < std::max<long long>(N, 1); ++m) {
            if (gcd_ll(m == 0 && N == 1 ? 1 : m, N) != 1) continue;
            auto lg = g_->logs(m == 0 && N == 1 ? 1 : m);
            long long t = 0;
            for (size_t i = 0; i < lg.size(); ++i)
                t = (t + evec_[i] * lg[i] % L * (L / g_->comps[i].order)) % L;
            table_[static_cast<size_t>(m)] = t;
        }
        if (N == 1) table_[0] = 0;  // the trivial character is 1 everywhere
    }

    std::shared_ptr<const UnitGroup> g_;
    std::vector<long long> evec_;
    long long label_;
    std::vector<long long> table_;
};

// all phi(N) characters, label order = lexicographic in exponent vectors,
// principal character first
inline std::vector<DirichletCharacter> characters_mod(long long N) {
    auto g = UnitGroup::build(N);
    std::vector<DirichletCharacter> out;
    long long total = g->phi();
    out.reserve(static_cast<size_t>(total));
    std::vector<long long> evec(g->comps.size(), 0);
    for (long long label = 0; label < total; ++label) {
        out.emplace_back(g, evec, label);
        for (size_t i = evec.size(); i-- > 0;) {
            if (++evec[i] < g->comps[i].order) break;
            evec[i] = 0;
        }
    }
    return out;
}

inline DirichletCharacter character_by_index(long long N, long long index) {
    auto all = characters_mod(N);
    if (index < 0 || index >= static_cast<long long>(all.size()))
        throw std::invalid_argument("character index out of range for modulus");
    return all[static_cast<size_t>(index)];
}

// epsilon = (1 - chi(-1))/2: 0 for even characters, 1 for odd
inline int parity_epsilon(const DirichletCharacter& chi) {
    cplx v = chi.modulus() == 1 ? cplx{1.0, 0.0} : chi.value(chi.modulus() - 1);
    return std::abs(v - cplx{1.0, 0.0}) < 1e-9 ? 0 : 1;
}

// tau(chi) = sum_m chi(m) e^{2 pi i m / N}
inline cplx gauss_sum(const DirichletCharacter& chi) {
    long long N = chi.modulus();
    cplx s = 0.0;
    for (long long m = 0; m < N; ++m)
        s += chi.value(m) * unit_phase(static_cast<double>(m) / static_cast<double>(N));
    if (N == 1) s = 1.0;
    return s;
}

// smallest modulus inducing chi
inline long long conductor(const DirichletCharacter& chi) {
    long long N = chi.modulus();
    for (long long d = 1; d <= N; ++d) {
        if (N % d != 0) continue;
        bool induced = true;
        for (long long m = 1; m <= N && induced; ++m) {
            if (gcd_ll(m, N) != 1) continue;
            if (m % d == 1 % d) {
                long long t = chi.value_exponent(m);
                if (t != 0) induced = false;
            }
        }
        if (induced) return d;
    }
    return N;
}

inline bool is_primitive(const DirichletCharacter& chi) { return conductor(chi) == chi.modulus(); }

}  // namespace parton

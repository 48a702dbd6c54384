#include "kchar/root_data.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kchar {

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
        case Family::F4: return "F4";
        case Family::G2: return "G2";
    }
    throw std::logic_error("family_name");
}

namespace {

void check_rank(Family f, int rank) {
    bool ok = false;
    switch (f) {
        case Family::A: ok = rank >= 1; break;
        case Family::B: ok = rank >= 2; break;
        case Family::C: ok = rank >= 2; break;
        case Family::D: ok = rank >= 3; break;
        case Family::E6: ok = rank == 6; break;
        case Family::E7: ok = rank == 7; break;
        case Family::E8: ok = rank == 8; break;
        case Family::F4: ok = rank == 4; break;
        case Family::G2: ok = rank == 2; break;
    }
    if (!ok)
        throw std::invalid_argument("unsupported rank " + std::to_string(rank) + " for family " +
                                    family_name(f));
}

// Cartan matrix a[i][j] = <alpha_i, alpha_j-check> and the half square
// lengths of the simple roots, long roots normalized to length^2 = 2.
void cartan_and_lengths(Family f, int n, std::vector<std::vector<long long>>& a,
                        std::vector<Rational>& len) {
    a.assign(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto chain = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
    len.assign(n, Rational(1));
    switch (f) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
            break;
        case Family::B:
            // alpha_n short
            for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
            a[n - 2][n - 1] = -2;
            a[n - 1][n - 2] = -1;
            len[n - 1] = Rational(1, 2);
            break;
        case Family::C:
            // alpha_1..alpha_{n-1} short, alpha_n long
            for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
            a[n - 2][n - 1] = -1;
            a[n - 1][n - 2] = -2;
            for (int i = 0; i + 1 < n; ++i) len[i] = Rational(1, 2);
            break;
        case Family::D:
            for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
            chain(n - 3, n - 1);
            break;
        case Family::G2:
            // alpha_1 short: V_{omega_1} is the 7-dimensional module
            a[0][1] = -1;
            a[1][0] = -3;
            len[0] = Rational(1, 3);
            break;
        case Family::F4:
            // alpha_1, alpha_2 short so that V_{omega_1} is 26-dimensional
            chain(0, 1);
            chain(2, 3);
            a[1][2] = -1;
            a[2][1] = -2;
            len[0] = len[1] = Rational(1, 2);
            break;
        case Family::E6:
        case Family::E7:
        case Family::E8: {
            // chain 1-3-4-5-..., node 2 attached to node 4
            chain(0, 2);
            for (int i = 2; i + 1 < n; ++i) chain(i, i + 1);
            a[1][3] = a[3][1] = -1;
            a[1][2] = a[2][1] = 0;
            break;
        }
    }
}

size_t expected_positive_root_count(Family f, int n) {
    switch (f) {
        case Family::A: return static_cast<size_t>(n) * (n + 1) / 2;
        case Family::B:
        case Family::C: return static_cast<size_t>(n) * n;
        case Family::D: return static_cast<size_t>(n) * (n - 1);
        case Family::G2: return 6;
        case Family::F4: return 24;
        case Family::E6: return 36;
        case Family::E7: return 63;
        case Family::E8: return 120;
    }
    throw std::logic_error("expected_positive_root_count");
}

}  // namespace

RootDatum RootDatum::build(Family family, int rank) {
    check_rank(family, rank);
    RootDatum d;
    d.family_ = family;
    d.rank_ = rank;
    cartan_and_lengths(family, rank, d.cartan_, d.half_len_);

    // Close the simple roots under root strings: beta + alpha_i is a root
    // iff p - <beta, alpha_i-check> > 0 with p the depth of the i-string
    // through beta.
    std::set<std::vector<long long>> roots;
    std::vector<std::vector<long long>> frontier;
    for (int i = 0; i < rank; ++i) {
        std::vector<long long> e(rank, 0);
        e[i] = 1;
        roots.insert(e);
        frontier.push_back(std::move(e));
    }
    while (!frontier.empty()) {
        std::vector<std::vector<long long>> next;
        for (const auto& beta : frontier) {
            for (int i = 0; i < rank; ++i) {
                long long pairing = 0;
                for (int j = 0; j < rank; ++j) pairing += beta[j] * d.cartan_[j][i];
                long long p = 0;
                std::vector<long long> down = beta;
                while (true) {
                    down[i] -= 1;
                    if (down[i] < 0) break;
                    if (std::all_of(down.begin(), down.end(), [](long long c) { return c == 0; }))
                        break;  // the string does not continue through zero
                    if (!roots.count(down)) break;
                    ++p;
                }
                if (p - pairing > 0) {
                    std::vector<long long> up = beta;
                    up[i] += 1;
                    if (roots.insert(up).second) next.push_back(std::move(up));
                }
            }
        }
        frontier = std::move(next);
    }
    d.positive_roots_.assign(roots.begin(), roots.end());
    if (d.positive_roots_.size() != expected_positive_root_count(family, rank))
        throw std::logic_error("root generation produced wrong count for " + family_name(family));
    return d;
}

bool RootDatum::is_dominant_integral(const Weight& lambda) const {
    if (static_cast<int>(lambda.size()) != rank_) return false;
    for (const auto& c : lambda)
        if (!is_integer(c) || c < 0) return false;
    return true;
}

Int RootDatum::weyl_dim(const Weight& lambda) const {
    if (!is_dominant_integral(lambda))
        throw std::invalid_argument("weyl_dim: weight is not dominant integral");
    Rational dim = 1;
    for (const auto& alpha : positive_roots_) {
        Rational num = 0, den = 0;
        for (int i = 0; i < rank_; ++i) {
            if (alpha[i] == 0) continue;
            Rational w = Rational(alpha[i]) * half_len_[i];
            num += w * (lambda[i] + 1);
            den += w;
        }
        dim *= num / den;
    }
    if (!is_integer(dim)) throw std::logic_error("weyl_dim: non-integral result");
    return numerator(dim);
}

std::vector<Weight> RootDatum::enumerate_dominant_dim_at_most(const Int& C) const {
    if (C < 1) throw std::invalid_argument("enumerate_dominant_dim_at_most: C must be >= 1");
    std::vector<Weight> out;
    Weight lambda(rank_, Rational(0));
    // depth-first over coordinates; dimension grows strictly with every
    // coordinate, so a prefix already above C cannot recover
    auto rec = [&](auto&& self, int pos) -> void {
        if (weyl_dim(lambda) > C) return;
        if (pos == rank_) {
            out.push_back(lambda);
            return;
        }
        for (long long v = 0;; ++v) {
            lambda[pos] = v;
            if (weyl_dim(lambda) > C) break;
            self(self, pos + 1);
        }
        lambda[pos] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Weight RootDatum::dual_weight(const Weight& lambda) const {
    std::vector<int> inv(rank_);
    for (int i = 0; i < rank_; ++i) inv[i] = i;
    switch (family_) {
        case Family::A:
            for (int i = 0; i < rank_; ++i) inv[i] = rank_ - 1 - i;
            break;
        case Family::D:
            if (rank_ % 2 == 1) std::swap(inv[rank_ - 2], inv[rank_ - 1]);
            break;
        case Family::E6:
            inv[0] = 5;
            inv[5] = 0;
            inv[2] = 4;
            inv[4] = 2;
            break;
        default: break;  // B, C, E7, E8, F4, G2: -w0 = id
    }
    Weight dual(rank_);
    for (int i = 0; i < rank_; ++i) dual[inv[i]] = lambda[i];
    return dual;
}

bool RootDatum::is_self_dual(const Weight& lambda) const { return dual_weight(lambda) == lambda; }

long long r_g(Family family, int rank) {
    switch (family) {
        case Family::A: return rank;                      // sl(n+1)
        case Family::C: return rank;                      // sp(2n)
        case Family::B:
            if (rank < 2) break;
            return 2 * rank - 2;                          // so(2n+1)
        case Family::D:
            if (rank < 3) break;
            return 2 * rank - 3;                          // so(2n)
        case Family::G2: return 3;
        case Family::F4: return 8;
        case Family::E6: return 11;
        case Family::E7: return 17;
        case Family::E8: return 29;
    }
    throw std::invalid_argument("r_g: not a simple algebra");
}

Rational borel_dim(long long dim_k, long long rank_k) {
    return Rational(dim_k + rank_k, 2);
}

long long family_dim(Family f, int rank) {
    check_rank(f, rank);
    long long n = rank;
    switch (f) {
        case Family::A: return n * (n + 2);
        case Family::B:
        case Family::C: return n * (2 * n + 1);
        case Family::D: return n * (2 * n - 1);
        case Family::G2: return 14;
        case Family::F4: return 52;
        case Family::E6: return 78;
        case Family::E7: return 133;
        case Family::E8: return 248;
    }
    throw std::logic_error("family_dim");
}

long long family_rank(Family f, int rank) {
    check_rank(f, rank);
    return rank;
}

long long SubalgebraDescriptor::dim() const {
    long long d = central_dim;
    for (const auto& [f, r] : summands) d += family_dim(f, r);
    return d;
}

long long SubalgebraDescriptor::rank() const {
    long long r = central_dim;
    for (const auto& [f, rk] : summands) r += rk;
    return r;
}

}  // namespace kchar

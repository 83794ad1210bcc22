#include "qstab/oracle.hpp"

#include <algorithm>
#include <random>

#include "qstab/ar_structure.hpp"

namespace qstab {
namespace oracle {

namespace {

int mod_inverse(int a, int p) {
    // p is a small prime; Fermat
    int result = 1, base = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

long long matrix_rank(std::vector<std::vector<int>> m, int p) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        int inv = mod_inverse(m[rank][col], p);
        for (size_t j = col; j < cols; ++j) m[rank][j] = m[rank][j] * inv % p;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            int f = m[i][col];
            for (size_t j = col; j < cols; ++j)
                m[i][j] = ((m[i][j] - f * m[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return static_cast<long long>(rank);
}

void check_compatible(const ExplicitRep& M, const ExplicitRep& N) {
    if (M.p != N.p) throw Error(Errc::FieldMismatch, "representations over different primes");
    if (M.arrows != N.arrows)
        throw Error(Errc::FieldMismatch, "representations over different quivers");
}

long long encode(const std::vector<int>& v, int p) {
    long long code = 0;
    for (int x : v) code = code * p + x;
    return code;
}

struct Subspace {
    int dim = 0;
    std::vector<std::vector<int>> basis;
    std::vector<long long> elements;  // sorted codes of all members

    bool contains(long long code) const {
        return std::binary_search(elements.begin(), elements.end(), code);
    }
};

void fill_elements(Subspace& s, int n, int p) {
    int k = s.dim;
    long long count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    s.elements.reserve(count);
    std::vector<int> coeff(k, 0);
    for (;;) {
        std::vector<int> v(n, 0);
        for (int i = 0; i < k; ++i)
            if (coeff[i])
                for (int j = 0; j < n; ++j) v[j] = (v[j] + coeff[i] * s.basis[i][j]) % p;
        s.elements.push_back(encode(v, p));
        int i = 0;
        while (i < k && coeff[i] == p - 1) coeff[i++] = 0;
        if (i == k) break;
        ++coeff[i];
    }
    std::sort(s.elements.begin(), s.elements.end());
}

// All subspaces of F_p^n, enumerated through reduced row echelon bases.
std::vector<Subspace> all_subspaces(int n, int p) {
    std::vector<Subspace> out;
    for (int k = 0; k <= n; ++k) {
        // choose pivot columns p_0 < ... < p_{k-1}
        std::vector<int> pivots(k);
        for (int i = 0; i < k; ++i) pivots[i] = i;
        for (;;) {
            // free entries: row r, column c with c > pivots[r], c not a pivot
            std::vector<std::pair<int, int>> free_pos;
            for (int r = 0; r < k; ++r)
                for (int c = pivots[r] + 1; c < n; ++c)
                    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
                        free_pos.emplace_back(r, c);
            std::vector<int> fill(free_pos.size(), 0);
            for (;;) {
                Subspace s;
                s.dim = k;
                s.basis.assign(k, std::vector<int>(n, 0));
                for (int r = 0; r < k; ++r) s.basis[r][pivots[r]] = 1;
                for (size_t t = 0; t < free_pos.size(); ++t)
                    s.basis[free_pos[t].first][free_pos[t].second] = fill[t];
                fill_elements(s, n, p);
                out.push_back(std::move(s));
                size_t i = 0;
                while (i < fill.size() && fill[i] == p - 1) fill[i++] = 0;
                if (i == fill.size()) break;
                ++fill[i];
            }
            // next pivot combination
            int i = k - 1;
            while (i >= 0 && pivots[i] == n - k + i) --i;
            if (i < 0) break;
            ++pivots[i];
            for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
        }
    }
    return out;
}

}  // namespace

ExplicitRep random_rep(const Quiver& q, const DimVector& d, int p, std::uint64_t seed) {
    if (static_cast<int>(d.size()) != q.size())
        throw Error(Errc::DimensionMismatch, "vector length does not match quiver");
    if (!is_nonnegative(d))
        throw Error(Errc::NegativeEntry, "dimension vector must be nonnegative");
    std::mt19937_64 gen(seed);
    ExplicitRep rep;
    rep.arrows = q.arrows();
    rep.p = p;
    rep.dim = d;
    for (auto [s, t] : q.arrows()) {
        Matrix m(d[t], std::vector<int>(d[s], 0));
        for (auto& row : m)
            for (auto& x : row) x = static_cast<int>(gen() % static_cast<std::uint64_t>(p));
        rep.matrices.push_back(std::move(m));
    }
    return rep;
}

long long hom_dim(const ExplicitRep& M, const ExplicitRep& N) {
    check_compatible(M, N);
    int p = M.p;
    size_t nv = M.dim.size();
    std::vector<long long> offset(nv + 1, 0);
    for (size_t i = 0; i < nv; ++i) offset[i + 1] = offset[i] + N.dim[i] * M.dim[i];
    long long vars = offset[nv];
    if (vars == 0) return 0;

    std::vector<std::vector<int>> rows;
    for (size_t a = 0; a < M.arrows.size(); ++a) {
        auto [i, j] = M.arrows[a];
        const Matrix& Ma = M.matrices[a];
        const Matrix& Na = N.matrices[a];
        for (long long r = 0; r < N.dim[j]; ++r)
            for (long long c = 0; c < M.dim[i]; ++c) {
                std::vector<int> row(vars, 0);
                for (long long k = 0; k < M.dim[j]; ++k)
                    row[offset[j] + r * M.dim[j] + k] =
                        (row[offset[j] + r * M.dim[j] + k] + Ma[k][c]) % p;
                for (long long k = 0; k < N.dim[i]; ++k)
                    row[offset[i] + k * M.dim[i] + c] =
                        ((row[offset[i] + k * M.dim[i] + c] - Na[r][k]) % p + p) % p;
                rows.push_back(std::move(row));
            }
    }
    return vars - matrix_rank(std::move(rows), p);
}

long long end_dim(const ExplicitRep& M) { return hom_dim(M, M); }

ExplicitRep verify_generic(const Quiver& q, const DimVector& d, int p, int attempts,
                           std::uint64_t seed0) {
    // End = 1 certifies genericity for real Schur roots (the indecomposable
    // of that dimension is unique). For d = delta it only certifies
    // indecomposability: the tops of rank-2 tubes also have trivial
    // endomorphisms. Those are excluded exactly by requiring Hom = 0 to and
    // from every non-homogeneous quasi-simple, which holds iff the module is
    // homogeneous regular.
    std::vector<ExplicitRep> tube_probes;
    if (q.connected() && q.type().is_euclidean() && d == q.delta())
        for (const auto& tube : tube_system(q).tubes)
            for (const auto& qs : tube.quasi_simples)
                tube_probes.push_back(verify_generic(q, qs, p, attempts, seed0 + 7919));

    for (int t = 0; t < attempts; ++t) {
        ExplicitRep rep = random_rep(q, d, p, seed0 + static_cast<std::uint64_t>(t));
        if (end_dim(rep) != 1) continue;
        bool homogeneous = true;
        for (const auto& probe : tube_probes)
            if (hom_dim(probe, rep) != 0 || hom_dim(rep, probe) != 0) {
                homogeneous = false;
                break;
            }
        if (homogeneous) return rep;
    }
    throw Error(Errc::GenericityNotFound,
                "no representation of " + dim_to_string(d) + " with End of dimension 1 in " +
                    std::to_string(attempts) + " attempts over F_" + std::to_string(p));
}

std::vector<DimVector> subdims_bruteforce(const ExplicitRep& M) {
    if (total_dim(M.dim) > 8)
        throw Error(Errc::ResourceLimit, "subspace enumeration is guarded to total dimension 8");
    if (M.p != 2 && M.p != 3)
        throw Error(Errc::ResourceLimit, "subspace enumeration is guarded to F_2 and F_3");

    size_t nv = M.dim.size();
    std::vector<std::vector<Subspace>> spaces(nv);
    for (size_t i = 0; i < nv; ++i) spaces[i] = all_subspaces(static_cast<int>(M.dim[i]), M.p);

    std::vector<DimVector> found;
    std::vector<size_t> choice(nv, 0);
    for (;;) {
        bool closed = true;
        for (size_t a = 0; a < M.arrows.size() && closed; ++a) {
            auto [s, t] = M.arrows[a];
            const Subspace& vs = spaces[s][choice[s]];
            const Subspace& vt = spaces[t][choice[t]];
            for (const auto& b : vs.basis) {
                std::vector<int> img(M.dim[t], 0);
                for (long long r = 0; r < M.dim[t]; ++r) {
                    int acc = 0;
                    for (long long c = 0; c < M.dim[s]; ++c)
                        acc = (acc + M.matrices[a][r][c] * b[c]) % M.p;
                    img[r] = acc;
                }
                if (!vt.contains(encode(img, M.p))) { closed = false; break; }
            }
        }
        if (closed) {
            DimVector d(nv);
            for (size_t i = 0; i < nv; ++i) d[i] = spaces[i][choice[i]].dim;
            found.push_back(std::move(d));
        }
        size_t i = 0;
        while (i < nv && choice[i] + 1 == spaces[i].size()) choice[i++] = 0;
        if (i == nv) break;
        ++choice[i];
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

ExplicitRep transpose_rep(const ExplicitRep& M) {
    ExplicitRep rep;
    rep.p = M.p;
    rep.dim = M.dim;
    for (size_t a = 0; a < M.arrows.size(); ++a) {
        auto [s, t] = M.arrows[a];
        rep.arrows.emplace_back(t, s);
        Matrix m(M.dim[s], std::vector<int>(M.dim[t], 0));
        for (long long r = 0; r < M.dim[t]; ++r)
            for (long long c = 0; c < M.dim[s]; ++c) m[c][r] = M.matrices[a][r][c];
        rep.matrices.push_back(std::move(m));
    }
    return rep;
}

StabilityVerdict semistable_bruteforce(const ExplicitRep& M, const Weight& theta) {
    Rational mu = slope(theta, M.dim);
    StabilityVerdict verdict{Stability::Stable, mu, std::nullopt, std::nullopt};
    for (const auto& e : subdims_bruteforce(M)) {
        if (is_zero(e) || e == M.dim) continue;
        Rational se = slope(theta, e);
        if (se > mu) {
            if (!verdict.violator) {
                verdict.violator = e;
            } else {
                Rational sv = slope(theta, *verdict.violator);
                if (se > sv || (se == sv && *verdict.violator < e)) verdict.violator = e;
            }
            verdict.status = Stability::Unstable;
        } else if (se == mu) {
            if (!verdict.equal_slope_witness) verdict.equal_slope_witness = e;
            if (verdict.status == Stability::Stable) verdict.status = Stability::Semistable;
        }
    }
    if (verdict.status != Stability::Unstable) verdict.violator.reset();

    // quotient-side cross-check on the transposed opposite representation
    Stability quot_status = Stability::Stable;
    for (const auto& u : subdims_bruteforce(transpose_rep(M))) {
        if (is_zero(u) || u == M.dim) continue;
        Rational sf = slope(theta, u);  // subdims of D(M) are the quotient dims of M
        if (sf < mu)
            quot_status = Stability::Unstable;
        else if (sf == mu && quot_status == Stability::Stable)
            quot_status = Stability::Semistable;
        if (quot_status == Stability::Unstable) break;
    }
    if ((verdict.status == Stability::Unstable) != (quot_status == Stability::Unstable) ||
        (verdict.status == Stability::Stable) != (quot_status == Stability::Stable))
        throw Error(Errc::InternalInconsistency,
                    "submodule and quotient stability tests disagree");
    return verdict;
}

}  // namespace oracle
}  // namespace qstab

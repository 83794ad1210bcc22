#include "qstab/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "qstab/rational.hpp"

#include <json.hpp>

namespace qstab {

DimVector operator+(const DimVector& a, const DimVector& b) {
    DimVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

DimVector operator-(const DimVector& a, const DimVector& b) {
    DimVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

DimVector operator*(long long c, const DimVector& a) {
    DimVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

long long total_dim(const DimVector& d) {
    return std::accumulate(d.begin(), d.end(), 0LL);
}

bool is_nonnegative(const DimVector& d) {
    return std::all_of(d.begin(), d.end(), [](long long x) { return x >= 0; });
}

bool is_zero(const DimVector& d) {
    return std::all_of(d.begin(), d.end(), [](long long x) { return x == 0; });
}

std::string dim_to_string(const DimVector& d) {
    std::string s = "(";
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
    }
    return s + ")";
}

std::string QuiverType::str() const {
    switch (cls) {
        case TypeClass::Dynkin:
            return std::string("Dynkin(") + series + "," + std::to_string(rank) + ")";
        case TypeClass::Euclidean:
            return std::string("Euclidean(") + series + "~," + std::to_string(rank) + ")";
        case TypeClass::Wild:
            return "Wild";
    }
    return "?";
}

namespace {

// Leading principal k x k minor of an integer matrix, by Bareiss
// fraction-free elimination. Exact for the sizes this library handles.
long long leading_minor(const IntMat& m, int k) {
    std::vector<std::vector<long long>> a(k, std::vector<long long>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) a[i][j] = m[i][j];
    long long prev = 1;
    for (int p = 0; p < k; ++p) {
        if (a[p][p] == 0) {
            int s = -1;
            for (int i = p + 1; i < k; ++i)
                if (a[i][p] != 0) { s = i; break; }
            if (s < 0) return 0;
            std::swap(a[p], a[s]);
            for (int j = 0; j < k; ++j) a[p][j] = -a[p][j];
        }
        for (int i = p + 1; i < k; ++i)
            for (int j = p + 1; j < k; ++j)
                a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
        prev = a[p][p];
    }
    return a[k - 1][k - 1];
}

long long scaled_to_int(const Rational& x, long long lcm) {
    return x.num() * (lcm / x.den());
}

// Rational kernel basis of an n x n integer matrix, each basis vector
// scaled to a primitive integer vector.
std::vector<DimVector> integer_kernel(const IntMat& m) {
    int n = static_cast<int>(m.size());
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);

    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int p = -1;
        for (int i = row; i < n; ++i)
            if (a[i][col] != Rational(0)) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[row], a[p]);
        Rational inv = Rational(1) / a[row][col];
        for (int j = 0; j < n; ++j) a[row][j] = a[row][j] * inv;
        for (int i = 0; i < n; ++i) {
            if (i == row) continue;
            Rational f = a[i][col];
            if (f == Rational(0)) continue;
            for (int j = 0; j < n; ++j) a[i][j] = a[i][j] - f * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }

    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;

    std::vector<DimVector> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(n, Rational(0));
        v[free] = Rational(1);
        for (size_t r = 0; r < pivot_col.size(); ++r)
            v[pivot_col[r]] = -a[r][free];
        long long lcm = 1;
        for (const auto& x : v) lcm = std::lcm(lcm, x.den());
        DimVector iv(n);
        for (int j = 0; j < n; ++j) iv[j] = scaled_to_int(v[j], lcm);
        long long g = 0;
        for (long long x : iv) g = std::gcd(g, x);
        if (g > 1)
            for (auto& x : iv) x /= g;
        basis.push_back(iv);
    }
    return basis;
}

}  // namespace

Quiver::Quiver(std::vector<std::string> vertices,
               std::vector<std::pair<int, int>> arrows,
               bool allow_disconnected)
    : names_(std::move(vertices)), arrows_(std::move(arrows)) {
    int n = size();
    if (n == 0) throw Error(Errc::MalformedInput, "quiver needs at least one vertex");
    {
        std::set<std::string> seen;
        for (const auto& v : names_)
            if (!seen.insert(v).second)
                throw Error(Errc::DuplicateVertex, "duplicate vertex '" + v + "'");
    }
    for (auto [s, t] : arrows_)
        if (s < 0 || s >= n || t < 0 || t >= n)
            throw Error(Errc::MalformedInput, "arrow endpoint out of range");

    // acyclicity via Kahn's algorithm
    {
        std::vector<int> indeg(n, 0);
        for (auto [s, t] : arrows_) (void)s, ++indeg[t];
        std::queue<int> q;
        for (int i = 0; i < n; ++i)
            if (indeg[i] == 0) q.push(i);
        int removed = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            ++removed;
            for (auto [s, t] : arrows_)
                if (s == v && --indeg[t] == 0) q.push(t);
        }
        if (removed != n)
            throw Error(Errc::CyclicQuiver, "quiver contains an oriented cycle");
    }

    // connectivity of the underlying graph
    {
        std::vector<std::vector<int>> adj(n);
        for (auto [s, t] : arrows_) {
            adj[s].push_back(t);
            adj[t].push_back(s);
        }
        std::vector<bool> vis(n, false);
        std::queue<int> q;
        q.push(0);
        vis[0] = true;
        int count = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v])
                if (!vis[w]) {
                    vis[w] = true;
                    ++count;
                    q.push(w);
                }
        }
        connected_ = (count == n);
        if (!connected_ && !allow_disconnected)
            throw Error(Errc::DisconnectedQuiver, "underlying graph is not connected");
    }

    euler_.assign(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) euler_[i][i] = 1;
    for (auto [s, t] : arrows_) euler_[s][t] -= 1;

    compute_coxeter();
    if (connected_) classify();
}

Quiver Quiver::parse(const std::string& text, bool allow_disconnected) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::MalformedInput, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
        throw Error(Errc::MalformedInput, "expected object with 'vertices' and 'arrows'");
    if (!j["vertices"].is_array() || !j["arrows"].is_array())
        throw Error(Errc::MalformedInput, "'vertices' and 'arrows' must be arrays");

    std::vector<std::string> names;
    std::map<std::string, int> index;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string())
            throw Error(Errc::MalformedInput, "vertex identifiers must be strings");
        std::string name = v.get<std::string>();
        if (index.count(name))
            throw Error(Errc::DuplicateVertex, "duplicate vertex '" + name + "'");
        index[name] = static_cast<int>(names.size());
        names.push_back(name);
    }

    std::vector<std::pair<int, int>> arrows;
    for (const auto& a : j["arrows"]) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_string() || !a[1].is_string())
            throw Error(Errc::MalformedInput, "each arrow must be a pair of vertex names");
        auto s = index.find(a[0].get<std::string>());
        auto t = index.find(a[1].get<std::string>());
        if (s == index.end() || t == index.end())
            throw Error(Errc::MalformedInput, "arrow references unknown vertex");
        arrows.emplace_back(s->second, t->second);
    }
    return Quiver(std::move(names), std::move(arrows), allow_disconnected);
}

void Quiver::check_dim(const DimVector& d) const {
    if (static_cast<int>(d.size()) != size())
        throw Error(Errc::DimensionMismatch,
                    "vector length " + std::to_string(d.size()) + " does not match " +
                        std::to_string(size()) + " vertices");
}

long long Quiver::euler_form(const DimVector& d, const DimVector& e) const {
    check_dim(d);
    check_dim(e);
    long long acc = 0;
    int n = size();
    for (int i = 0; i < n; ++i) {
        if (d[i] == 0) continue;
        long long row = 0;
        for (int j = 0; j < n; ++j) row += euler_[i][j] * e[j];
        acc += d[i] * row;
    }
    return acc;
}

void Quiver::compute_coxeter() {
    int n = size();
    // C^{-1}[i][j] counts paths i -> j; exact since the quiver is acyclic.
    IntMat cinv(n, std::vector<long long>(n, 0));
    std::vector<int> order;  // topological
    {
        std::vector<int> indeg(n, 0);
        for (auto [s, t] : arrows_) (void)s, ++indeg[t];
        std::queue<int> q;
        for (int i = 0; i < n; ++i)
            if (indeg[i] == 0) q.push(i);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            order.push_back(v);
            for (auto [s, t] : arrows_)
                if (s == v && --indeg[t] == 0) q.push(t);
        }
    }
    for (int src = 0; src < n; ++src) {
        cinv[src][src] = 1;
        for (int v : order)
            if (cinv[src][v] != 0)
                for (auto [s, t] : arrows_)
                    if (s == v) cinv[src][t] += cinv[src][v];
    }
    // Phi = -C^{-T} C, Phi^{-1} = -C^{-1} C^T.
    phi_.assign(n, std::vector<long long>(n, 0));
    phi_inv_.assign(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long long p = 0, pi = 0;
            for (int k = 0; k < n; ++k) {
                p += cinv[k][i] * euler_[k][j];
                pi += cinv[i][k] * euler_[j][k];
            }
            phi_[i][j] = -p;
            phi_inv_[i][j] = -pi;
        }
}

void Quiver::classify() {
    int n = size();
    IntMat sym(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sym[i][j] = euler_[i][j] + euler_[j][i];

    auto kernel = integer_kernel(sym);

    // undirected degrees, counting parallel arrows
    std::vector<int> deg(n, 0);
    for (auto [s, t] : arrows_) ++deg[s], ++deg[t];
    int max_deg = *std::max_element(deg.begin(), deg.end());
    int deg3 = static_cast<int>(std::count(deg.begin(), deg.end(), 3));

    has_type_ = true;
    if (kernel.empty()) {
        bool pd = true;
        for (int k = 1; k <= n; ++k)
            if (leading_minor(sym, k) <= 0) { pd = false; break; }
        if (!pd) {
            type_ = {TypeClass::Wild, 0, 0};
            return;
        }
        type_.cls = TypeClass::Dynkin;
        type_.rank = n;
        if (max_deg <= 2) {
            type_.series = 'A';
        } else {
            // one branch vertex; arm lengths decide D vs E
            int b = static_cast<int>(std::find(deg.begin(), deg.end(), 3) - deg.begin());
            std::vector<int> arms;
            std::vector<std::vector<int>> adj(n);
            for (auto [s, t] : arrows_) adj[s].push_back(t), adj[t].push_back(s);
            for (int start : adj[b]) {
                int len = 1, prev = b, cur = start;
                while (deg[cur] == 2) {
                    int next = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
                    prev = cur;
                    cur = next;
                    ++len;
                }
                arms.push_back(len);
            }
            std::sort(arms.begin(), arms.end());
            if (arms.size() == 3 && arms[0] == 1 && arms[1] == 1)
                type_.series = 'D';
            else
                type_.series = 'E';
        }
        return;
    }

    if (kernel.size() == 1) {
        DimVector v = kernel[0];
        bool pos = std::all_of(v.begin(), v.end(), [](long long x) { return x > 0; });
        bool neg = std::all_of(v.begin(), v.end(), [](long long x) { return x < 0; });
        if (neg)
            for (auto& x : v) x = -x;
        if (pos || neg) {
            // For 2I - A with A the adjacency matrix of a connected graph, a
            // strictly positive kernel vector forces the Perron value of A to
            // be 2, so the symmetrized form is positive semidefinite.
            type_.cls = TypeClass::Euclidean;
            type_.rank = n - 1;
            if (max_deg <= 2)
                type_.series = 'A';
            else if (max_deg >= 4 || deg3 >= 2)
                type_.series = 'D';
            else
                type_.series = 'E';
            delta_ = v;
            return;
        }
    }
    type_ = {TypeClass::Wild, 0, 0};
}

const QuiverType& Quiver::type() const {
    if (!has_type_)
        throw Error(Errc::DisconnectedQuiver, "type is only defined for connected quivers");
    return type_;
}

const DimVector& Quiver::delta() const {
    if (!type().is_euclidean())
        throw Error(Errc::NotTame, "delta requires a Euclidean quiver, got " + type().str());
    return delta_;
}

long long Quiver::defect(const DimVector& d) const {
    return euler_form(delta(), d);
}

DimVector Quiver::coxeter(const DimVector& d, bool inverse) const {
    check_dim(d);
    const IntMat& m = inverse ? phi_inv_ : phi_;
    int n = size();
    DimVector r(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i] += m[i][j] * d[j];
    return r;
}

Quiver Quiver::opposite() const {
    std::vector<std::pair<int, int>> rev;
    rev.reserve(arrows_.size());
    for (auto [s, t] : arrows_) rev.emplace_back(t, s);
    return Quiver(names_, std::move(rev), !connected_);
}

}  // namespace qstab

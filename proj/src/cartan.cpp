#include "uqmod/cartan.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace uqmod {

namespace {

struct TypeFacts {
    long positive_roots;
    int highest_height;
};

TypeFacts type_facts(const std::string& type, int n) {
    if (type == "A") return {static_cast<long>(n) * (n + 1) / 2, n};
    if (type == "B" || type == "C") return {static_cast<long>(n) * n, 2 * n - 1};
    if (type == "D") return {static_cast<long>(n) * (n - 1), 2 * n - 3};
    if (type == "E" && n == 6) return {36, 11};
    if (type == "E" && n == 7) return {63, 17};
    if (type == "E" && n == 8) return {120, 29};
    if (type == "F") return {24, 11};
    if (type == "G") return {6, 5};
    fail(Err::Internal, "unknown type " + type);
}

// Recognize one connected component; vertices are indices into the full
// matrix. Fills type/rank and validates finiteness.
void classify_component(const std::vector<std::vector<long>>& a, CartanComponent& comp) {
    const auto& vs = comp.vertices;
    int n = static_cast<int>(vs.size());
    comp.rank = n;
    auto A = [&](int i, int j) { return a[static_cast<size_t>(vs[static_cast<size_t>(i)])][static_cast<size_t>(vs[static_cast<size_t>(j)])]; };

    if (n == 1) {
        comp.type = "A";
        return;
    }

    int edges = 0, triple = 0, dbl = 0;
    std::vector<int> deg(static_cast<size_t>(n), 0);
    std::pair<int, int> dbl_edge{-1, -1};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            long m = A(i, j) * A(j, i);
            if (m == 0) continue;
            ++edges;
            ++deg[static_cast<size_t>(i)];
            ++deg[static_cast<size_t>(j)];
            if (m >= 4)
                fail(Err::NotFiniteType, "edge multiplicity >= 4 between vertices " +
                                             std::to_string(vs[static_cast<size_t>(i)] + 1) + "," +
                                             std::to_string(vs[static_cast<size_t>(j)] + 1));
            if (m == 3) ++triple;
            if (m == 2) {
                ++dbl;
                dbl_edge = {i, j};
            }
        }
    if (edges != n - 1)
        fail(Err::NotFiniteType, "component has a cycle (not a tree)");
    int max_deg = *std::max_element(deg.begin(), deg.end());
    int branch = static_cast<int>(std::count(deg.begin(), deg.end(), 3));
    if (max_deg > 3 || branch > 1) fail(Err::NotFiniteType, "branch pattern matches no Dynkin diagram");

    if (triple > 0) {
        if (n != 2 || triple != 1) fail(Err::NotFiniteType, "triple edge only allowed in G2");
        comp.type = "G";
        return;
    }
    if (dbl > 1) fail(Err::NotFiniteType, "more than one double edge");
    if (dbl == 1) {
        if (max_deg > 2) fail(Err::NotFiniteType, "double edge with branching");
        if (n == 2) {
            comp.type = "B"; // B2 = C2
            return;
        }
        // path; double edge must sit at an end (B/C) or in the middle of 4 (F4)
        auto [u, w] = dbl_edge;
        bool end = deg[static_cast<size_t>(u)] == 1 || deg[static_cast<size_t>(w)] == 1;
        if (end) {
            // For the path endpoint e of the double edge, a_{e,other} = -2
            // makes e the short root (type B); a_{e,other} = -1 makes it the
            // long root (type C).
            int e = deg[static_cast<size_t>(u)] == 1 ? u : w;
            int o = e == u ? w : u;
            comp.type = A(e, o) == -2 ? "B" : "C";
            return;
        }
        if (n == 4 && deg[static_cast<size_t>(u)] == 2 && deg[static_cast<size_t>(w)] == 2) {
            comp.type = "F";
            return;
        }
        fail(Err::NotFiniteType, "double edge placement matches no Dynkin diagram");
    }
    // simply laced
    if (max_deg <= 2) {
        comp.type = "A";
        return;
    }
    // one branch vertex: arm lengths decide D/E
    int b = static_cast<int>(std::find(deg.begin(), deg.end(), 3) - deg.begin());
    std::vector<int> arms;
    for (int s = 0; s < n; ++s) {
        if (A(b, s) == 0 || s == b) continue;
        int len = 0, prev = b, cur = s;
        while (true) {
            ++len;
            int nxt = -1;
            for (int t = 0; t < n; ++t)
                if (t != prev && t != cur && A(cur, t) != 0) nxt = t;
            if (nxt < 0) break;
            prev = cur;
            cur = nxt;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    assert(arms.size() == 3);
    if (arms[0] == 1 && arms[1] == 1) {
        comp.type = "D";
        return;
    }
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
        comp.type = "E";
        return;
    }
    fail(Err::NotFiniteType, "branching matches no Dynkin diagram");
}

// Minimal positive integer solution of d_i a_ij = d_j a_ji on a connected
// component (propagation over the tree, then clearing denominators).
void solve_symmetrizers(const std::vector<std::vector<long>>& a, const CartanComponent& comp,
                        std::vector<long>& d_out) {
    const auto& vs = comp.vertices;
    int n = static_cast<int>(vs.size());
    std::vector<mpq_class> d(static_cast<size_t>(n), mpq_class(0));
    d[0] = 1;
    std::vector<int> stack{0};
    std::vector<bool> seen(static_cast<size_t>(n), false);
    seen[0] = true;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j) {
            size_t vi = static_cast<size_t>(vs[static_cast<size_t>(i)]);
            size_t vj = static_cast<size_t>(vs[static_cast<size_t>(j)]);
            if (seen[static_cast<size_t>(j)] || a[vi][vj] == 0 || i == j) continue;
            d[static_cast<size_t>(j)] = d[static_cast<size_t>(i)] * a[vi][vj] / a[vj][vi];
            seen[static_cast<size_t>(j)] = true;
            stack.push_back(j);
        }
    }
    mpz_class l(1);
    for (const auto& x : d) {
        mpz_class den = x.get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        l = l / g * den;
    }
    std::vector<long> ints;
    mpz_class g(0);
    for (const auto& x : d) {
        mpz_class v = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        ints.push_back(v.get_si());
    }
    long gg = g.get_si();
    for (int i = 0; i < n; ++i) {
        long di = ints[static_cast<size_t>(i)] / gg;
        if (di < 1 || di > 3) fail(Err::NotFiniteType, "symmetrizer outside {1,2,3}");
        d_out[static_cast<size_t>(vs[static_cast<size_t>(i)])] = di;
    }
}

} // namespace

CartanMatrix validate_cartan(const std::vector<std::vector<long>>& m) {
    size_t n = m.size();
    if (n == 0) fail(Err::NotGeneralizedCartan, "empty matrix");
    for (size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) fail(Err::NotGeneralizedCartan, "matrix not square");
        if (m[i][i] != 2)
            fail(Err::NotGeneralizedCartan, "diagonal entry a_" + std::to_string(i + 1) +
                                                std::to_string(i + 1) + " != 2");
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (m[i][j] > 0)
                fail(Err::NotGeneralizedCartan, "positive off-diagonal entry at (" +
                                                    std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            if ((m[i][j] == 0) != (m[j][i] == 0))
                fail(Err::NotGeneralizedCartan, "zero pattern not symmetric at (" +
                                                    std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
    }

    CartanMatrix cm;
    cm.a_ = m;
    auto& comp = cm.comp_;
    comp.comp_of.assign(n, -1);
    comp.d.assign(n, 1);
    for (size_t start = 0; start < n; ++start) {
        if (comp.comp_of[start] >= 0) continue;
        CartanComponent c;
        std::vector<size_t> stack{start};
        comp.comp_of[start] = static_cast<int>(comp.components.size());
        while (!stack.empty()) {
            size_t i = stack.back();
            stack.pop_back();
            c.vertices.push_back(static_cast<int>(i));
            for (size_t j = 0; j < n; ++j) {
                if (i == j || m[i][j] == 0 || comp.comp_of[j] >= 0) continue;
                comp.comp_of[j] = static_cast<int>(comp.components.size());
                stack.push_back(j);
            }
        }
        std::sort(c.vertices.begin(), c.vertices.end());
        classify_component(m, c);
        auto facts = type_facts(c.type, c.rank);
        c.positive_roots = facts.positive_roots;
        c.highest_root_height = facts.highest_height;
        solve_symmetrizers(m, c, comp.d);
        comp.components.push_back(std::move(c));
    }
    return cm;
}

std::vector<std::vector<long>> cartan_of_type(char type, int rank) {
    if (rank < 1) fail(Err::ParseError, "rank must be >= 1");
    auto path = [&](int n) {
        std::vector<std::vector<long>> a(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n), 0));
        for (int i = 0; i < n; ++i) a[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
        for (int i = 0; i + 1 < n; ++i) {
            a[static_cast<size_t>(i)][static_cast<size_t>(i + 1)] = -1;
            a[static_cast<size_t>(i + 1)][static_cast<size_t>(i)] = -1;
        }
        return a;
    };
    switch (type) {
        case 'A':
            return path(rank);
        case 'B': {
            if (rank < 2) fail(Err::ParseError, "B requires rank >= 2");
            auto a = path(rank);
            a[static_cast<size_t>(rank - 1)][static_cast<size_t>(rank - 2)] = -2;
            return a;
        }
        case 'C': {
            if (rank < 2) fail(Err::ParseError, "C requires rank >= 2");
            auto a = path(rank);
            a[static_cast<size_t>(rank - 2)][static_cast<size_t>(rank - 1)] = -2;
            return a;
        }
        case 'D': {
            if (rank < 3) fail(Err::ParseError, "D requires rank >= 3");
            auto a = path(rank);
            a[static_cast<size_t>(rank - 1)][static_cast<size_t>(rank - 2)] = 0;
            a[static_cast<size_t>(rank - 2)][static_cast<size_t>(rank - 1)] = 0;
            a[static_cast<size_t>(rank - 1)][static_cast<size_t>(rank - 3)] = -1;
            a[static_cast<size_t>(rank - 3)][static_cast<size_t>(rank - 1)] = -1;
            return a;
        }
        case 'E': {
            if (rank < 6 || rank > 8) fail(Err::ParseError, "E requires rank 6..8");
            // Bourbaki: vertex 2 attaches to vertex 4 of the path 1-3-4-5-...
            auto a = path(rank);
            // rebuild: path over 1,3,4,...,n then attach 2 to 4
            for (auto& row : a) std::fill(row.begin(), row.end(), 0);
            for (int i = 0; i < rank; ++i) a[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
            std::vector<int> pathv{0};
            for (int i = 2; i < rank; ++i) pathv.push_back(i);
            for (size_t i = 0; i + 1 < pathv.size(); ++i) {
                a[static_cast<size_t>(pathv[i])][static_cast<size_t>(pathv[i + 1])] = -1;
                a[static_cast<size_t>(pathv[i + 1])][static_cast<size_t>(pathv[i])] = -1;
            }
            a[1][3] = a[3][1] = -1;
            return a;
        }
        case 'F': {
            if (rank != 4) fail(Err::ParseError, "F requires rank 4");
            auto a = path(4);
            a[1][2] = -2;
            return a;
        }
        case 'G': {
            if (rank != 2) fail(Err::ParseError, "G requires rank 2");
            return {{2, -3}, {-1, 2}};
        }
        default:
            fail(Err::ParseError, std::string("unknown type letter '") + type + "'");
    }
}

std::string dynkin_dot(const CartanMatrix& cm) {
    std::ostringstream os;
    os << "graph dynkin {\n";
    for (int i = 0; i < cm.rank(); ++i) {
        const auto& c = cm.components().components[static_cast<size_t>(cm.components().comp_of[static_cast<size_t>(i)])];
        os << "  v" << (i + 1) << " [label=\"" << (i + 1) << " (" << c.type << c.rank
           << ", d=" << cm.d(i) << ")\"];\n";
    }
    for (int i = 0; i < cm.rank(); ++i)
        for (int j = i + 1; j < cm.rank(); ++j) {
            long mult = cm.entry(i, j) * cm.entry(j, i);
            if (mult == 0) continue;
            os << "  v" << (i + 1) << " -- v" << (j + 1);
            if (mult > 1) os << " [label=\"" << mult << "\"]";
            os << ";\n";
        }
    os << "}\n";
    return os.str();
}

} // namespace uqmod

#include "boxperf/boxtdi.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "boxperf/tu.hpp"
#include "json.hpp"

namespace boxperf {

namespace {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long long next_prime_above(long long x) {
    long long p = x + 1;
    while (!is_prime(p)) ++p;
    return p;
}

}  // namespace

RGraphResult build_R_graph(const Graph& gprime, VertexSet side_u, VertexSet side_v,
                           const Graph& gsecond, const Budgets& budgets) {
    ClassQReport q = class_Q_membership(gprime, side_u, side_v, budgets);
    if (!q.member) throw error("build_R_graph: G' is not in class Q");
    auto us = set_to_vec(side_u), vs = set_to_vec(side_v);
    int nu = (int)us.size(), nv = (int)vs.size();
    if (gsecond.n != nv) throw error("build_R_graph: G'' must live on the V side");
    const IntMatrix& M = q.biadjacency;
    for (int i = 0; i < nu; ++i) {
        VertexSet nb = 0;
        for (int j = 0; j < nv; ++j)
            if (M.at(i, j)) nb |= bit(j);
        if (!gsecond.is_clique(nb))
            throw error("build_R_graph: N(u) is not a clique of G'' for u = " +
                        std::to_string(us[i]));
    }
    RGraphResult r;
    r.record.M = M;
    long long total = 0;
    for (long long x : M.a) total += x;
    if (total % 4 != 2) throw error("build_R_graph: |E'| is not 2 mod 4 (internal bug)");
    r.record.m = (total - 2) / 4;
    for (int i = 0; i < nu; ++i) {
        bool allones = true;
        for (int j = 0; j < nv; ++j)
            if (!M.at(i, j)) { allones = false; break; }
        if (allones) {
            if (r.record.deleted)
                throw error("build_R_graph: two dominating U-vertices (internal bug)");
            r.record.deleted = true;
            r.record.deleted_row = i;
        }
    }
    int n_out = nv + nu - (r.record.deleted ? 1 : 0);
    Graph g(n_out, "R-graph");
    for (auto [a, b] : gsecond.edges()) g.add_edge(a, b);
    int upos = nv;
    for (int i = 0; i < nu; ++i) {
        if (i == r.record.deleted_row) continue;
        for (int j = 0; j < nv; ++j)
            if (M.at(i, j)) g.add_edge(upos, j);
        ++upos;
    }
    r.graph = g;
    return r;
}

namespace {

struct RecordView {
    int nv = 0;              // V side size (= columns of M)
    std::vector<int> rows;   // surviving row of M per U vertex (row order)
};

// Verifies that G is the graph the record describes and hands back the
// vertex split. V occupies 0..nv-1 in column order; U rows follow.
RecordView check_record(const Graph& g, const ConstructionRecord& record) {
    const IntMatrix& M = record.M;
    for (long long x : M.a)
        if (x != 0 && x != 1) throw error("record: M entries must be 0/1");
    long long total = 0;
    for (long long x : M.a) total += x;
    if (total != 4 * record.m + 2) throw error("record: 1^T M 1 != 4m + 2");
    for (long long s : M.col_sums())
        if (s % 2) throw error("record: odd column sum (w would not be integral)");
    RecordView view;
    view.nv = M.cols;
    int survivors = M.rows - (record.deleted ? 1 : 0);
    if (g.n != M.cols + survivors) throw error("record inconsistent with G: vertex count");
    if (record.deleted) {
        if (record.deleted_row < 0 || record.deleted_row >= M.rows)
            throw error("record: deleted row out of range");
        for (int j = 0; j < M.cols; ++j)
            if (!M.at(record.deleted_row, j))
                throw error("record: deleted row is not all-ones");
        if (M.cols % 2) throw error("record: deleted case needs an even side");
        VertexSet vside = full_set(M.cols);
        if (!g.is_clique(vside))
            throw error("record inconsistent with G: deleted case needs complete G''");
    }
    int upos = M.cols;
    for (int i = 0; i < M.rows; ++i) {
        if (record.deleted && i == record.deleted_row) continue;
        VertexSet nb = 0;
        for (int j = 0; j < M.cols; ++j)
            if (M.at(i, j)) nb |= bit(j);
        if (g.adj[upos] != nb)
            throw error("record inconsistent with G: neighborhood of U vertex " +
                        std::to_string(upos));
        if (!g.is_clique(nb))
            throw error("record inconsistent with G: N(u) is not a clique");
        if (!record.deleted && nb == full_set(M.cols))
            throw error("record: dominating U-vertex present but case is non-deleted");
        view.rows.push_back(i);
        ++upos;
    }
    return view;
}

}  // namespace

BoxCertificate make_R_certificate(const Graph& g, const ConstructionRecord& record,
                                  std::optional<long long> p_opt, const Budgets& budgets) {
    RecordView view = check_record(g, record);
    const IntMatrix& M = record.M;
    int nv = view.nv, nu = (int)view.rows.size();
    auto colsum = M.col_sums();
    auto rowsum = M.row_sums();
    BoxCertificate cert;
    cert.w.assign(g.n, 0);
    cert.l.assign(g.n, Rational(0));
    cert.x.assign(g.n, Rational(0));
    cert.z.assign(g.n, Rational(0));
    Rational half(1, 2);
    long long denom;
    if (!record.deleted) {
        long long p = p_opt.value_or(next_prime_above(2 * record.m + 1));
        if (!is_prime(p) || p <= 2 * record.m + 1)
            throw error("make_R_certificate: p must be a prime above 2m+1");
        denom = 2 * p;
        cert.value = Rational(2 * record.m + 1, 2 * p);
    } else {
        if (p_opt) throw error("make_R_certificate: the deleted case takes no prime");
        denom = nv;  // even by the record checks
        cert.value = Rational(2 * record.m + 1, nv);
    }
    for (int j = 0; j < nv; ++j) {
        cert.w[j] = colsum[j] / 2;
        cert.x[j] = Rational(1, denom);
    }
    for (int i = 0; i < nu; ++i) {
        int v = nv + i;
        cert.l[v] = Rational(1) - Rational(rowsum[view.rows[i]], denom);
        cert.x[v] = cert.l[v];
        cert.z[v] = half;
    }
    // y follows the artifact's B_G row order: 1/2 on each {u} + N(u) row;
    // pure-V rows carry 0, except the whole V side in the deleted case.
    CliqueFamily cf = maximal_cliques(g, budgets);
    VertexSet vside = full_set(nv);
    cert.rows = cf.cliques;
    cert.y.assign(cf.cliques.size(), Rational(0));
    int ku_rows = 0, vrow = -1;
    for (size_t r = 0; r < cf.cliques.size(); ++r) {
        VertexSet k = cf.cliques[r];
        VertexSet upart = k & ~vside;
        if (popcount(upart) > 1)
            throw error("make_R_certificate: clique with two U-vertices (record inconsistent)");
        if (popcount(upart) == 1) {
            int u = lowest(upart);
            if (k != (g.adj[u] | bit(u)))
                throw error("make_R_certificate: U-clique is not {u} + N(u)");
            cert.y[r] = half;
            ++ku_rows;
        } else if (record.deleted) {
            if (k != vside)
                throw error("make_R_certificate: unexpected V-side clique in deleted case");
            cert.y[r] = half;
            vrow = (int)r;
        }
    }
    if (ku_rows != nu) throw error("make_R_certificate: missing a {u} + N(u) clique");
    if (record.deleted && vrow < 0) throw error("make_R_certificate: V clique not maximal");
    return cert;
}

const CertCheck* CertReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

CertReport verify_certificate(const Graph& g, const BoxCertificate& cert,
                              bool exhaustive_dual, const Budgets& budgets) {
    CliqueMatrix cm = clique_matrix(g, budgets);
    size_t nrows = cm.B.rows;
    if (cert.w.size() != (size_t)g.n || cert.l.size() != (size_t)g.n ||
        cert.x.size() != (size_t)g.n || cert.z.size() != (size_t)g.n ||
        cert.y.size() != cert.rows.size())
        throw error("verify_certificate: dimension mismatch");
    if (cert.rows.size() != nrows)
        throw error("verify_certificate: certificate rows do not match B_G row count");
    // map the recorded row order onto the artifact's B_G order
    std::vector<int> perm(nrows, -1);
    {
        std::vector<char> taken(nrows, 0);
        for (size_t i = 0; i < nrows; ++i) {
            bool found = false;
            for (size_t r = 0; r < nrows; ++r) {
                if (!taken[r] && cm.B.rows > 0) {
                    VertexSet row = 0;
                    for (int v = 0; v < g.n; ++v)
                        if (cm.B.at((int)r, v)) row |= bit(v);
                    if (row == cert.rows[i]) {
                        perm[i] = (int)r;
                        taken[r] = 1;
                        found = true;
                        break;
                    }
                }
            }
            if (!found)
                throw error("verify_certificate: recorded row is not a maximal clique of G");
        }
    }
    CertReport rep;
    rep.value = cert.value;
    auto push = [&](const std::string& name, bool ok, const std::string& detail = "") {
        rep.checks.push_back({name, ok, detail});
    };
    bool ok;
    std::string detail;

    ok = true;
    for (int v = 0; v < g.n && ok; ++v)
        if (cert.l[v] < Rational(0)) { ok = false; detail = "l[" + std::to_string(v) + "] < 0"; }
    push("l nonnegative", ok, detail);

    ok = true;
    detail.clear();
    for (int v = 0; v < g.n && ok; ++v)
        if (cert.x[v] < cert.l[v]) { ok = false; detail = "x[" + std::to_string(v) + "] < l"; }
    push("primal: x >= l", ok, detail);

    ok = true;
    detail.clear();
    for (size_t r = 0; r < nrows && ok; ++r) {
        Rational s;
        for (int v : set_to_vec(cert.rows[r])) s += cert.x[v];
        if (s > Rational(1)) {
            ok = false;
            detail = "clique row " + std::to_string(r) + " sums to " + s.str();
        }
    }
    push("primal: B x <= 1", ok, detail);

    ok = true;
    detail.clear();
    for (size_t r = 0; r < nrows && ok; ++r)
        if (cert.y[r] < Rational(0)) { ok = false; detail = "y[" + std::to_string(r) + "] < 0"; }
    for (int v = 0; v < g.n && ok; ++v)
        if (cert.z[v] < Rational(0)) { ok = false; detail = "z[" + std::to_string(v) + "] < 0"; }
    push("dual: y, z >= 0", ok, detail);

    ok = true;
    detail.clear();
    for (int v = 0; v < g.n && ok; ++v) {
        Rational s;
        for (size_t r = 0; r < nrows; ++r)
            if ((cert.rows[r] >> v) & 1) s += cert.y[r];
        s -= cert.z[v];
        if (s != Rational(cert.w[v])) {
            ok = false;
            detail = "column " + std::to_string(v) + ": y^T B - z = " + s.str();
        }
    }
    push("dual: y^T B - z^T = w^T", ok, detail);

    Rational primal_obj;
    for (int v = 0; v < g.n; ++v) primal_obj += Rational(cert.w[v]) * cert.x[v];
    push("objective: w^T x = value", primal_obj == cert.value,
         primal_obj == cert.value ? "" : "w^T x = " + primal_obj.str());
    Rational dual_obj;
    for (size_t r = 0; r < nrows; ++r) dual_obj += cert.y[r];
    dual_obj -= dot(cert.z, cert.l);
    push("objective: y^T 1 - z^T l = value", dual_obj == cert.value,
         dual_obj == cert.value ? "" : "y^T 1 - z^T l = " + dual_obj.str());

    long long gran = 1;
    for (int v = 0; v < g.n; ++v) gran = std::lcm(gran, cert.l[v].den());
    rep.granularity = gran;
    // an integral dual value would be 1/gran-integral; the optimum is not
    bool obstruction = (gran % cert.value.den()) != 0;
    push("obstruction: value is not 1/" + std::to_string(gran) + "-integral", obstruction,
         obstruction ? "" : "value " + cert.value.str() + " is 1/" + std::to_string(gran) +
                                "-integral; no contradiction");

    if (exhaustive_dual) {
        long long maxw = 0;
        for (long long x : cert.w) maxw = std::max(maxw, x);
        // Any integral dual with some y_C > max(w) reduces: dropping y_C by
        // one keeps z = B^T y - w >= 0 coordinatewise (coverage of every
        // v in C stays >= y_C - 1 >= max(w) >= w_v) and changes the
        // objective by -1 + sum_{v in C} l_v <= -1 + 1 <= 0, using that a
        // feasible primal x with l <= x and sum_{v in C} x_v <= 1 exists.
        std::optional<Rational> best;
        std::vector<long long> y(nrows, 0);
        long long nodes = 0;
        auto rec = [&](auto&& self, size_t r) -> void {
            if (++nodes > budgets.dual_budget)
                throw budget_error("verify_certificate: dual enumeration budget exceeded");
            if (r == nrows) {
                RationalVector zz(g.n);
                for (int v = 0; v < g.n; ++v) {
                    long long cov = 0;
                    for (size_t rr = 0; rr < nrows; ++rr)
                        if ((cert.rows[rr] >> v) & 1) cov += y[rr];
                    if (cov < cert.w[v]) return;  // z would be negative
                    zz[v] = Rational(cov - cert.w[v]);
                }
                Rational obj;
                for (size_t rr = 0; rr < nrows; ++rr) obj += Rational(y[rr]);
                obj -= dot(zz, cert.l);
                if (!best || obj < *best) best = obj;
                return;
            }
            for (long long val = 0; val <= maxw; ++val) {
                y[r] = val;
                self(self, r + 1);
            }
            y[r] = 0;
        };
        rec(rec, 0);
        if (!best) throw error("verify_certificate: no integral dual found (internal bug)");
        rep.integral_dual_value = best;
        push("exhaustive integral dual exceeds value", *best > cert.value,
             "integral dual optimum = " + best->str());
    }

    rep.pass = true;
    for (const auto& c : rep.checks)
        if (!c.ok) rep.pass = false;
    return rep;
}

IntegralDual integral_dual_optimum(const Graph& g, const RationalVector& u,
                                   const std::vector<long long>& w, const Budgets& budgets) {
    if (u.size() != (size_t)g.n || w.size() != (size_t)g.n)
        throw error("integral_dual_optimum: dimension mismatch");
    for (const Rational& x : u)
        if (x < Rational(0)) throw error("integral_dual_optimum: u must be nonnegative");
    for (long long x : w)
        if (x < 0) throw error("integral_dual_optimum: w must be nonnegative");
    CliqueFamily cf = maximal_cliques(g, budgets);
    int nrows = (int)cf.cliques.size();
    long long maxw = 0;
    for (long long x : w) maxw = std::max(maxw, x);
    // y_C -> y_C - 1 is free when y_C > max(w): coverage inside C stays
    // above w, z is unchanged and the objective drops by one.
    std::vector<std::vector<long long>> tailcov(nrows + 1, std::vector<long long>(g.n, 0));
    for (int r = nrows - 1; r >= 0; --r) {
        tailcov[r] = tailcov[r + 1];
        for (int v : set_to_vec(cf.cliques[r])) tailcov[r][v] += maxw;
    }
    IntegralDual best;
    bool have = false;
    std::vector<long long> y(nrows, 0), cov(g.n, 0);
    long long nodes = 0;
    // objective lower bound from the unavoidable z deficit of the tail
    auto lower_bound_tail = [&](int r, long long ycost) {
        Rational lb(ycost);
        for (int v = 0; v < g.n; ++v) {
            long long deficit = w[v] - cov[v] - tailcov[r][v];
            if (deficit > 0) lb += Rational(deficit) * u[v];
        }
        return lb;
    };
    auto go = [&](auto&& self, int r, long long ycost) -> void {
        if (++nodes > budgets.dual_budget)
            throw budget_error("integral_dual_optimum: budget exceeded");
        if (have && !(lower_bound_tail(r, ycost) < best.value)) return;
        if (r == nrows) {
            Rational obj(ycost);
            std::vector<long long> z(g.n, 0);
            for (int v = 0; v < g.n; ++v)
                if (cov[v] < w[v]) {
                    z[v] = w[v] - cov[v];
                    obj += Rational(z[v]) * u[v];
                }
            if (!have || obj < best.value) {
                have = true;
                best.value = obj;
                best.y = y;
                best.z = z;
            }
            return;
        }
        for (long long val = 0; val <= maxw; ++val) {
            y[r] = val;
            self(self, r + 1, ycost + val);  // cov holds val copies of row r
            for (int v : set_to_vec(cf.cliques[r])) cov[v] += 1;
        }
        for (int v : set_to_vec(cf.cliques[r])) cov[v] -= (maxw + 1);
        y[r] = 0;
    };
    go(go, 0, 0);
    if (!have) throw error("integral_dual_optimum: empty search (internal bug)");
    return best;
}

FalsifyResult box_tdi_falsify_search(const Graph& g, const FalsifyLimits& limits,
                                     const Budgets& budgets) {
    if (g.n > 20) throw budget_error("box_tdi_falsify_search: graph too large");
    std::vector<Rational> palette;
    for (int q : limits.denoms)
        for (int k = 1; k <= q; ++k) {
            Rational r(k, q);
            if (std::find(palette.begin(), palette.end(), r) == palette.end())
                palette.push_back(r);
        }
    std::sort(palette.begin(), palette.end());
    FalsifyResult res;
    auto test = [&](const RationalVector& u, const std::vector<long long>& w) {
        IntegralDual a = integral_dual_optimum(g, u, w, budgets);
        std::vector<long long> w2(w.size());
        for (size_t i = 0; i < w.size(); ++i) w2[i] = 2 * w[i];
        IntegralDual b = integral_dual_optimum(g, u, w2, budgets);
        if (b.value < a.value * Rational(2)) {
            res.found = true;
            res.u = u;
            res.w = w;
            res.lhs = b.value;
            res.rhs = a.value * Rational(2);
            return true;
        }
        return false;
    };
    // phase one: uniform u over the palette, every w with |w|_inf <= max_w
    for (const Rational& t : palette) {
        RationalVector u(g.n, t);
        std::vector<long long> w(g.n, 0);
        while (true) {
            int i = g.n - 1;
            while (i >= 0 && w[i] == limits.max_w) { w[i] = 0; --i; }
            if (i < 0) break;
            ++w[i];
            if (test(u, w)) return res;
        }
    }
    // phase two: uniform w, u two-valued (palette value on a subset, 1 off)
    for (const Rational& t : palette) {
        if (t == Rational(1)) continue;
        for (int c = 1; c <= limits.max_w; ++c) {
            std::vector<long long> w(g.n, c);
            for (std::uint64_t s = 1; s + 1 < (std::uint64_t(1) << g.n); ++s) {
                RationalVector u(g.n, Rational(1));
                for (int v : set_to_vec(s)) u[v] = t;
                if (test(u, w)) return res;
            }
        }
    }
    std::ostringstream note;
    note << "no violation in the swept space: uniform u over " << palette.size()
         << " palette values x all w with |w|_inf <= " << limits.max_w
         << ", plus two-valued u at uniform w";
    res.note = note.str();
    return res;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json rat_vec(const RationalVector& v) {
    ordered_json a = ordered_json::array();
    for (const Rational& r : v) a.push_back(r.str());
    return a;
}

RationalVector rat_vec_parse(const ordered_json& a) {
    RationalVector v;
    for (const auto& x : a) v.push_back(Rational::parse(x.get<std::string>()));
    return v;
}

}  // namespace

std::string certificate_to_json(const Graph& g, const BoxCertificate& cert) {
    ordered_json j;
    j["graph"]["name"] = g.name;
    j["graph"]["n"] = g.n;
    ordered_json es = ordered_json::array();
    for (auto [u, v] : g.edges()) es.push_back({u, v});
    j["graph"]["edges"] = es;
    j["w"] = cert.w;
    j["l"] = rat_vec(cert.l);
    j["x"] = rat_vec(cert.x);
    j["z"] = rat_vec(cert.z);
    ordered_json rows = ordered_json::array();
    for (VertexSet r : cert.rows) rows.push_back(set_to_vec(r));
    j["rows"] = rows;
    j["y"] = rat_vec(cert.y);
    j["value"] = cert.value.str();
    return j.dump(2) + "\n";
}

BoxCertificate certificate_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    BoxCertificate cert;
    cert.w = j.at("w").get<std::vector<long long>>();
    cert.l = rat_vec_parse(j.at("l"));
    cert.x = rat_vec_parse(j.at("x"));
    cert.z = rat_vec_parse(j.at("z"));
    for (const auto& row : j.at("rows"))
        cert.rows.push_back(vec_to_set(row.get<std::vector<int>>()));
    cert.y = rat_vec_parse(j.at("y"));
    cert.value = Rational::parse(j.at("value").get<std::string>());
    return cert;
}

}  // namespace boxperf

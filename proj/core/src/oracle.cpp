#include "treeshift/oracle.hpp"

#include "treeshift/ca_seq.hpp"
#include "treeshift/classify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace treeshift {

Truncation::Truncation(const ShiftModel& model, std::uint64_t depth) : depth_(depth) {
    const DirectedTree& tree = model.tree();
    for (const auto& v : tree.vertices())
        if (tree.depth(v) <= depth)
            sites_.emplace_back(v);
    for (const auto& [anchor, tail] : model.tails()) {
        std::uint64_t base = tree.depth(anchor);
        for (std::uint64_t i = 1; base + i <= depth; ++i)
            sites_.emplace_back(TailSite{anchor, i});
    }

    for (std::size_t i = 0; i < sites_.size(); ++i)
        index_[site_to_string(sites_[i])] = i;

    parents_.resize(sites_.size());
    children_.resize(sites_.size());
    weights_.resize(sites_.size());
    depths_.resize(sites_.size());
    for (std::size_t i = 0; i < sites_.size(); ++i) {
        const Site& s = sites_[i];
        depths_[i] = model.site_depth(s);
        weights_[i] = SqrtRat::sqrt_of(model.site_weight_sq(s));
        if (std::holds_alternative<VertexId>(s)) {
            const VertexId& v = std::get<VertexId>(s);
            parents_[i] = (v == tree.root()) ? i : index_.at(tree.parent_of(v));
        } else {
            const auto& t = std::get<TailSite>(s);
            Site parent_site =
                (t.index == 1) ? Site(t.anchor) : Site(TailSite{t.anchor, t.index - 1});
            parents_[i] = index_.at(site_to_string(parent_site));
        }
        if (parents_[i] != i)
            children_[parents_[i]].push_back(i);
    }
}

std::size_t Truncation::index_of(const Site& site) const {
    auto it = index_.find(site_to_string(site));
    if (it == index_.end())
        throw StructuralError("truncation: site outside the section");
    return it->second;
}

std::vector<std::size_t> Truncation::safe_sites(std::uint64_t n) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < sites_.size(); ++i)
        if (depths_[i] + n <= depth_)
            out.push_back(i);
    return out;
}

std::map<std::size_t, SqrtRat> Truncation::power_column(std::size_t v, std::uint64_t n) const {
    std::map<std::size_t, SqrtRat> col{{v, SqrtRat(Rational(1))}};
    for (std::uint64_t step = 0; step < n; ++step) {
        std::map<std::size_t, SqrtRat> next;
        for (const auto& [i, coeff] : col) {
            for (std::size_t c : children_[i]) {
                SqrtRat term = weights_[c] * coeff;
                auto it = next.find(c);
                if (it == next.end())
                    next.emplace(c, term);
                else
                    it->second = it->second + term;
            }
        }
        col = std::move(next);
    }
    return col;
}

std::map<std::size_t, SqrtRat> Truncation::adjoint_power_column(std::size_t v,
                                                                std::uint64_t n) const {
    std::map<std::size_t, SqrtRat> col{{v, SqrtRat(Rational(1))}};
    for (std::uint64_t step = 0; step < n; ++step) {
        std::map<std::size_t, SqrtRat> next;
        for (const auto& [i, coeff] : col) {
            // row i of S* has the single entry conj(w_i) at the parent
            SqrtRat term = weights_[i] * coeff;
            if (term.is_zero())
                continue;
            std::size_t p = parents_[i];
            auto it = next.find(p);
            if (it == next.end())
                next.emplace(p, term);
            else
                it->second = it->second + term;
        }
        col = std::move(next);
    }
    return col;
}

Rational Truncation::column_norm_sq(std::size_t i) const {
    Rational sum = 0;
    for (std::size_t c : children_[i])
        sum += weights_[c].squared();
    return sum;
}

std::vector<std::vector<double>> Truncation::dense_double() const {
    std::vector<std::vector<double>> m(dim(), std::vector<double>(dim(), 0.0));
    for (std::size_t i = 0; i < dim(); ++i)
        if (parents_[i] != i)
            m[i][parents_[i]] = weights_[i].to_double();
    return m;
}

namespace {

struct PivotStep {
    std::size_t pivot;
    Rational d;
    std::map<std::size_t, Rational> column; // entries over still-active indices
};

std::vector<Rational> backmap_witness(std::size_t dim, const std::vector<PivotStep>& steps,
                                      std::map<std::size_t, Rational> partial) {
    // x_p = -(b . y) / d extends a Schur-complement witness one level up.
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        Rational dot = 0;
        for (const auto& [j, bj] : it->column) {
            auto found = partial.find(j);
            if (found != partial.end())
                dot += bj * found->second;
        }
        partial[it->pivot] = -dot / it->d;
    }
    std::vector<Rational> x(dim, 0);
    for (const auto& [i, xi] : partial)
        x[i] = xi;
    return x;
}

} // namespace

Rational quadratic_form(const std::vector<std::vector<Rational>>& matrix,
                        const std::vector<Rational>& x) {
    Rational sum = 0;
    for (std::size_t i = 0; i < matrix.size(); ++i)
        for (std::size_t j = 0; j < matrix.size(); ++j)
            sum += x[i] * matrix[i][j] * x[j];
    return sum;
}

PsdResult is_positive_semidefinite(std::vector<std::vector<Rational>> m) {
    const std::size_t dim = m.size();
    std::vector<bool> active(dim, true);
    std::vector<PivotStep> steps;
    PsdResult out;

    auto fail_with = [&](std::map<std::size_t, Rational> partial) {
        out.psd = false;
        out.witness = backmap_witness(dim, steps, std::move(partial));
    };

    while (true) {
        // a negative diagonal entry is an immediate witness
        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < dim; ++i) {
            if (!active[i])
                continue;
            if (m[i][i] < 0) {
                fail_with({{i, 1}});
                return out;
            }
            if (!best || m[i][i] > m[*best][*best])
                best = i;
        }
        if (!best)
            break; // nothing active: PSD

        std::size_t p = *best;
        if (m[p][p] == 0) {
            // all active diagonals are zero; any off-diagonal entry kills PSD
            std::optional<std::pair<std::size_t, std::size_t>> off;
            for (std::size_t i = 0; i < dim && !off; ++i)
                for (std::size_t j = i + 1; j < dim && !off; ++j)
                    if (active[i] && active[j] && m[i][j] != 0)
                        off = std::make_pair(i, j);
            if (!off)
                break; // zero matrix: PSD
            auto [i, j] = *off;
            // q(t e_i - e_j) = -2 t m_ij with zero diagonals
            Rational t = (m[i][j] > 0) ? 1 : -1;
            fail_with({{i, t}, {j, -1}});
            return out;
        }

        // pivot and form the Schur complement
        PivotStep step;
        step.pivot = p;
        step.d = m[p][p];
        active[p] = false;
        for (std::size_t i = 0; i < dim; ++i)
            if (active[i] && m[i][p] != 0)
                step.column[i] = m[i][p];
        for (const auto& [i, bi] : step.column)
            for (const auto& [j, bj] : step.column)
                m[i][j] -= bi * bj / step.d;
        steps.push_back(std::move(step));
    }
    return out;
}

void OracleReport::add(const std::string& name, bool ok, const std::string& detail) {
    lines.push_back(CheckLine{name, ok, detail});
    pass = pass && ok;
}

namespace {

std::vector<Site> children_k_of_site(const ShiftModel& model, const Site& site, std::uint64_t k) {
    if (std::holds_alternative<VertexId>(site))
        return model.children_k_sites(std::get<VertexId>(site), k);
    const auto& t = std::get<TailSite>(site);
    return {TailSite{t.anchor, t.index + k}};
}

bool nearly_equal(double a, double b) {
    double scale = std::max(1.0, std::abs(b));
    return std::abs(a - b) <= 1e-10 * scale;
}

} // namespace

OracleReport verify_power_formula(const ShiftModel& model, std::uint64_t depth, std::uint64_t n) {
    OracleReport report;
    Truncation tr(model, depth);

    bool forward_ok = true, adjoint_ok = true;
    std::string detail;
    for (std::size_t v : tr.safe_sites(n)) {
        for (std::uint64_t j = 0; j <= n; ++j) {
            auto col = tr.power_column(v, j);
            std::map<std::size_t, SqrtRat> expected;
            for (const Site& u : children_k_of_site(model, tr.sites()[v], j))
                expected.emplace(tr.index_of(u),
                                 SqrtRat::sqrt_of(lambda_k_sq(model, u, j)));
            // drop exact zeros on both sides before comparing
            std::erase_if(col, [](const auto& e) { return e.second.is_zero(); });
            std::erase_if(expected, [](const auto& e) { return e.second.is_zero(); });
            if (!(col == expected)) {
                forward_ok = false;
                detail = "S^" + std::to_string(j) + " e_" + site_to_string(tr.sites()[v]);
            }

            auto adj = tr.adjoint_power_column(v, j);
            std::erase_if(adj, [](const auto& e) { return e.second.is_zero(); });
            std::map<std::size_t, SqrtRat> adj_expected;
            {
                SqrtRat coeff = SqrtRat::sqrt_of(lambda_k_sq(model, tr.sites()[v], j));
                if (!coeff.is_zero()) {
                    std::size_t target = v;
                    for (std::uint64_t s = 0; s < j; ++s)
                        target = tr.parent(target);
                    adj_expected.emplace(target, coeff);
                }
            }
            if (!(adj == adj_expected)) {
                adjoint_ok = false;
                detail = "S*^" + std::to_string(j) + " e_" + site_to_string(tr.sites()[v]);
            }
        }
    }
    report.add("matrix powers match the product formula", forward_ok, detail);
    report.add("adjoint powers collapse to ancestors", adjoint_ok, detail);

    // Column norms, exact and in doubles.
    bool norm_exact_ok = true, norm_float_ok = true;
    auto dense = tr.dense_double();
    for (std::size_t v : tr.safe_sites(n)) {
        for (std::uint64_t j = 0; j <= n; ++j) {
            Rational expected = norm_sq(model, tr.sites()[v], j);
            Rational got = 0;
            for (const auto& [i, coeff] : tr.power_column(v, j))
                got += coeff.squared();
            if (got != expected)
                norm_exact_ok = false;

            // double-precision power of the dense matrix
            std::vector<double> vec(tr.dim(), 0.0);
            vec[v] = 1.0;
            for (std::uint64_t s = 0; s < j; ++s) {
                std::vector<double> next(tr.dim(), 0.0);
                for (std::size_t r = 0; r < tr.dim(); ++r) {
                    if (vec[r] == 0.0)
                        continue;
                    for (std::size_t c = 0; c < tr.dim(); ++c)
                        if (dense[c][r] != 0.0)
                            next[c] += dense[c][r] * vec[r];
                }
                vec = std::move(next);
            }
            double norm2 = 0.0;
            for (double x : vec)
                norm2 += x * x;
            if (!nearly_equal(norm2, to_double(expected)))
                norm_float_ok = false;
        }
    }
    report.add("column norms equal norm_sq exactly", norm_exact_ok);
    report.add("double-precision column norms within 1e-10", norm_float_ok);
    return report;
}

HypoReport verify_hyponormal(const ShiftModel& model, std::uint64_t depth) {
    HypoReport out;
    Truncation tr(model, depth);
    std::vector<std::size_t> w = tr.safe_sites(1);
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t i = 0; i < w.size(); ++i)
        pos[w[i]] = i;

    // Congruence by diag(weight or 1) clears the square roots of
    // [S*, S] = diag(column norms) - (w_u w_v on sibling pairs).
    std::vector<std::vector<Rational>> m(w.size(), std::vector<Rational>(w.size(), 0));
    for (std::size_t a = 0; a < w.size(); ++a) {
        std::size_t u = w[a];
        Rational wu2 = tr.weight(u).squared();
        Rational du2 = (wu2 == 0) ? Rational(1) : wu2;
        m[a][a] = du2 * (tr.column_norm_sq(u) - wu2);
        for (std::size_t b = a + 1; b < w.size(); ++b) {
            std::size_t v = w[b];
            if (tr.parent(u) == tr.parent(v) && tr.parent(u) != u && tr.parent(v) != v) {
                Rational entry = -(wu2 * tr.weight(v).squared());
                m[a][b] = entry;
                m[b][a] = entry;
            }
        }
    }

    out.psd_result = is_positive_semidefinite(m);
    out.psd = out.psd_result.psd;

    // The h-criterion over every parent whose whole sibling block is safe.
    out.expected = true;
    for (std::size_t p : tr.safe_sites(2)) {
        Rational h = 0;
        bool valid = true;
        for (std::size_t c : tr.children_of(p)) {
            Rational wc2 = tr.weight(c).squared();
            if (wc2 == 0)
                continue;
            Rational norm = tr.column_norm_sq(c);
            if (norm == 0) {
                valid = false;
                break;
            }
            h += wc2 / norm;
        }
        if (!valid || h > 1) {
            out.expected = false;
            break;
        }
    }

    out.report.add("commutator compression sign matches the h-criterion",
                   out.psd == out.expected,
                   out.psd ? "positive semidefinite" : "not positive semidefinite");
    if (!out.psd) {
        Rational value = quadratic_form(m, out.psd_result.witness);
        out.psd_result.witness_value = value;
        out.report.add("witness vector evaluates negative", value < 0,
                       rational_to_string(value));
    }
    return out;
}

AnReport verify_An(const ShiftModel& model, std::uint64_t depth, std::uint64_t n_max) {
    AnReport out;
    Truncation tr(model, depth);
    const std::size_t dim = tr.dim();

    using Sparse = std::map<std::pair<std::size_t, std::size_t>, SqrtRat>;
    Sparse shift;
    for (std::size_t i = 0; i < dim; ++i)
        if (tr.parent(i) != i && !tr.weight(i).is_zero())
            shift[{i, tr.parent(i)}] = tr.weight(i);

    auto matmul = [&](const Sparse& a, const Sparse& b) {
        std::map<std::size_t, std::vector<std::pair<std::size_t, const SqrtRat*>>> rows;
        for (const auto& [ij, val] : b)
            rows[ij.first].emplace_back(ij.second, &val);
        Sparse c;
        for (const auto& [ij, val] : a) {
            auto it = rows.find(ij.second);
            if (it == rows.end())
                continue;
            for (const auto& [j, bval] : it->second) {
                SqrtRat term = val * (*bval);
                if (term.is_zero())
                    continue;
                auto found = c.find({ij.first, j});
                if (found == c.end())
                    c.emplace(std::make_pair(ij.first, j), term);
                else {
                    found->second = found->second + term;
                    if (found->second.is_zero())
                        c.erase(found);
                }
            }
        }
        return c;
    };
    auto transpose = [](const Sparse& a) {
        Sparse t;
        for (const auto& [ij, val] : a)
            t[{ij.second, ij.first}] = val;
        return t;
    };
    auto subtract = [](const Sparse& a, const Sparse& b) {
        Sparse c = a;
        for (const auto& [ij, val] : b) {
            auto it = c.find(ij);
            if (it == c.end())
                c.emplace(ij, -val);
            else {
                it->second = it->second - val;
                if (it->second.is_zero())
                    c.erase(it);
            }
        }
        return c;
    };

    Sparse adjoint = transpose(shift);

    // recurrence route: A_{n+1} = A_n - S* A_n S
    std::vector<Sparse> a_rec(n_max + 1);
    for (std::size_t i = 0; i < dim; ++i)
        a_rec[0][{i, i}] = SqrtRat(Rational(1));
    for (std::uint64_t n = 0; n < n_max; ++n)
        a_rec[n + 1] = subtract(a_rec[n], matmul(adjoint, matmul(a_rec[n], shift)));

    // binomial route: A_n = sum_j (-1)^j C(n,j) S*^j S^j
    std::vector<Sparse> grams(n_max + 1);
    Sparse power; // S^j
    for (std::size_t i = 0; i < dim; ++i)
        power[{i, i}] = SqrtRat(Rational(1));
    for (std::uint64_t j = 0; j <= n_max; ++j) {
        if (j > 0)
            power = matmul(shift, power);
        grams[j] = matmul(transpose(power), power);
    }
    bool routes_agree = true;
    for (std::uint64_t n = 0; n <= n_max && routes_agree; ++n) {
        Sparse bin;
        mpz_class binom = 1;
        for (std::uint64_t j = 0; j <= n; ++j) {
            Rational coeff = Rational(binom) * ((j % 2 == 0) ? 1 : -1);
            for (const auto& [ij, val] : grams[j]) {
                SqrtRat term = val * SqrtRat(coeff);
                auto it = bin.find(ij);
                if (it == bin.end())
                    bin.emplace(ij, term);
                else {
                    it->second = it->second + term;
                    if (it->second.is_zero())
                        bin.erase(it);
                }
            }
            binom *= static_cast<unsigned long>(n - j);
            binom /= static_cast<unsigned long>(j + 1);
        }
        routes_agree = (bin == a_rec[n]);
    }
    out.report.add("recurrence and binomial routes agree entrywise", routes_agree);

    // compressions: diagonal, equal to the finite differences, signed
    bool diagonal_ok = true, oracle_ok = true;
    out.nsd.assign(n_max, true);
    out.zero.assign(n_max, true);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        std::vector<std::size_t> safe = tr.safe_sites(n);
        std::vector<bool> in_safe(dim, false);
        for (std::size_t i : safe)
            in_safe[i] = true;
        for (const auto& [ij, val] : a_rec[n])
            if (in_safe[ij.first] && in_safe[ij.second] && ij.first != ij.second &&
                !val.is_zero())
                diagonal_ok = false;
        for (std::size_t i : safe) {
            Rational diag = 0;
            auto it = a_rec[n].find({i, i});
            if (it != a_rec[n].end())
                diag = it->second.as_rational();
            // independent route: finite differences of the orbit norms
            std::vector<Rational> prefix;
            for (std::uint64_t j = 0; j <= n; ++j)
                prefix.push_back(norm_sq(model, tr.sites()[i], j));
            if (diag != alternating_sum(prefix, 0, n))
                oracle_ok = false;
            if (diag > 0)
                out.nsd[n - 1] = false;
            if (diag != 0)
                out.zero[n - 1] = false;
        }
    }
    out.report.add("safe compressions are diagonal", diagonal_ok);
    out.report.add("diagonal equals the finite-difference oracle", oracle_ok);

    CheResult che = check_che(model, std::max<std::uint64_t>(n_max, 4));
    if (che.verdict.ok()) {
        bool all_nsd = true;
        for (bool b : out.nsd)
            all_nsd = all_nsd && b;
        out.report.add("A_n compressions negative semidefinite on a CHE model", all_nsd);
    }
    return out;
}

} // namespace treeshift

#include "kstab/contraction.hpp"

#include "kstab/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kstab {

std::string ContractionModel::root_name(std::size_t j) const {
    if (j < root_names.size() && !root_names[j].empty()) return root_names[j];
    return "R" + std::to_string(j + 1);
}

std::vector<Rational> solve_exact(RationalMatrix a, std::vector<Rational> b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw Error(ErrorCode::DimensionMismatch, "right-hand side does not match matrix");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw Error(ErrorCode::SingularGram, "matrix is singular");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row][col].is_zero()) continue;
            Rational factor = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
            b[row] -= factor * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational s = b[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
        x[i] = s / a[i][i];
    }
    return x;
}

std::vector<std::vector<std::int64_t>> gram_matrix(const ContractionModel& model) {
    const auto& r = model.roots;
    std::vector<std::vector<std::int64_t>> g(r.size(), std::vector<std::int64_t>(r.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j) g[i][j] = pairing(r[i], r[j]);
    return g;
}

namespace {

RationalMatrix to_rational(const std::vector<std::vector<std::int64_t>>& g) {
    RationalMatrix out(g.size(), std::vector<Rational>(g.size()));
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) out[i][j] = g[i][j];
    return out;
}

// Positive definiteness of -G via exact elimination without pivoting: every
// pivot (ratio of consecutive leading principal minors) must be positive.
bool negative_definite(const std::vector<std::vector<std::int64_t>>& g) {
    RationalMatrix a = to_rational(g);
    const std::size_t n = a.size();
    for (auto& row : a)
        for (auto& x : row) x = -x;
    for (std::size_t col = 0; col < n; ++col) {
        if (a[col][col].sign() <= 0) return false;
        for (std::size_t row = col + 1; row < n; ++row) {
            Rational factor = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
        }
    }
    return true;
}

struct Component {
    char family;   // 'A', 'D', 'E'
    std::size_t rank;
};

Component classify_tree(const std::vector<std::size_t>& nodes, const std::vector<std::vector<std::size_t>>& adj) {
    std::size_t edges = 0;
    std::vector<std::size_t> branch;
    for (auto v : nodes) {
        edges += adj[v].size();
        if (adj[v].size() >= 3) branch.push_back(v);
    }
    edges /= 2;
    const std::size_t k = nodes.size();
    if (edges != k - 1) throw Error(ErrorCode::NotADEConfiguration, "root graph component contains a cycle");
    if (branch.empty()) return {'A', k};
    if (branch.size() > 1 || adj[branch[0]].size() != 3)
        throw Error(ErrorCode::NotADEConfiguration, "root graph is not a Dynkin diagram");
    std::vector<std::size_t> arms;
    for (auto start : adj[branch[0]]) {
        std::size_t len = 1, prev = branch[0], cur = start;
        while (adj[cur].size() == 2) {
            std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return {'D', k};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {'E', k};
    throw Error(ErrorCode::NotADEConfiguration, "root graph is not a Dynkin diagram");
}

}  // namespace

std::string validate(const ContractionModel& model) {
    const auto& lattice = model.lattice;
    for (std::size_t j = 0; j < model.roots.size(); ++j) {
        const auto& r = model.roots[j];
        if (r.rank() != lattice.n())
            throw Error(ErrorCode::DimensionMismatch, model.root_name(j) + " has rank " + std::to_string(r.rank()) +
                                                          ", lattice has rank " + std::to_string(lattice.n()));
        if (!lattice.is_root(r))
            throw Error(ErrorCode::NotADEConfiguration, model.root_name(j) + " = " + r.str() + " is not a (-2)-class orthogonal to K");
    }
    const auto g = gram_matrix(model);
    const std::size_t k = g.size();
    std::vector<std::vector<std::size_t>> adj(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            if (g[i][j] != 0 && g[i][j] != 1)
                throw Error(ErrorCode::NotADEConfiguration, model.root_name(i) + "." + model.root_name(j) + " = " +
                                                                std::to_string(g[i][j]) + ", expected 0 or 1");
            if (g[i][j] == 1) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    }
    if (!negative_definite(g)) throw Error(ErrorCode::NotNegativeDefinite, "Gram matrix of " + model.name + " is not negative definite");

    std::vector<Component> components;
    std::vector<bool> seen(k, false);
    for (std::size_t s = 0; s < k; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> nodes{s}, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : adj[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    nodes.push_back(w);
                    stack.push_back(w);
                }
            }
        }
        components.push_back(classify_tree(nodes, adj));
    }
    if (components.empty()) return "trivial";

    // Larger rank first, then E before D before A.
    std::map<std::pair<std::size_t, char>, std::size_t, std::greater<>> counts;
    for (const auto& c : components) ++counts[{c.rank, c.family}];
    std::string out;
    for (const auto& [key, count] : counts) {
        if (!out.empty()) out += "+";
        if (count > 1) out += std::to_string(count);
        out += key.second;
        out += std::to_string(key.first);
    }
    return out;
}

std::vector<Rational> root_projection(const ContractionModel& model, const DivisorClass& cls) {
    if (cls.rank() != model.lattice.n())
        throw Error(ErrorCode::DimensionMismatch, "class " + cls.str() + " does not live in the model lattice");
    const auto g = gram_matrix(model);
    std::vector<Rational> rhs(model.roots.size());
    for (std::size_t k = 0; k < model.roots.size(); ++k) rhs[k] = -pairing(cls, model.roots[k]);
    if (rhs.empty()) return {};
    return solve_exact(to_rational(g), rhs);
}

std::vector<Rational> mumford_pullback(const ContractionModel& model, const DivisorClass& cls) {
    for (std::size_t k = 0; k < model.roots.size(); ++k) {
        if (cls.rank() == model.roots[k].rank() && pairing(cls, model.roots[k]) < 0)
            throw Error(ErrorCode::NotProperTransform,
                        cls.str() + " pairs negatively with " + model.root_name(k) + " = " + model.roots[k].str());
    }
    auto a = root_projection(model, cls);
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j].sign() < 0)
            throw Error(ErrorCode::NotNegativeDefinite, "negative pull-back coefficient on " + model.root_name(j));
    }
    return a;
}

std::vector<Rational> contraction_discrepancies(const ContractionModel& model) {
    validate(model);
    auto a = root_projection(model, model.lattice.canonical());
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (!a[j].is_zero())
            throw Error(ErrorCode::NotADEConfiguration, "nonzero discrepancy " + a[j].str() + " on " + model.root_name(j));
    }
    return a;
}

std::vector<LineOrbit> line_orbits(const ContractionModel& model) {
    validate(model);
    const auto lines = enumerate_lines(model.lattice.n());

    // Orbits of the Weyl group generated by the reflections s_R(x) = x + (x.R) R
    // in the contracted roots. Two lines with the same image on the contracted
    // surface differ by a root-lattice element, and every orbit meets the
    // dominant chamber exactly once.
    std::map<DivisorClass, std::size_t> index;
    for (std::size_t i = 0; i < lines.size(); ++i) index.emplace(lines[i], i);
    std::vector<bool> seen(lines.size(), false);
    std::vector<std::vector<DivisorClass>> blocks;
    for (std::size_t s = 0; s < lines.size(); ++s) {
        if (seen[s]) continue;
        seen[s] = true;
        std::vector<DivisorClass> members{lines[s]};
        for (std::size_t head = 0; head < members.size(); ++head) {
            for (const auto& r : model.roots) {
                const auto k = pairing(members[head], r);
                if (k == 0) continue;
                const auto image = members[head] + k * r;
                auto it = index.find(image);
                if (it == index.end())
                    throw Error(ErrorCode::NotADEConfiguration, "reflection of " + members[head].str() + " is not a line");
                if (!seen[it->second]) {
                    seen[it->second] = true;
                    members.push_back(image);
                }
            }
        }
        std::sort(members.begin(), members.end());
        blocks.push_back(std::move(members));
    }

    std::vector<LineOrbit> orbits;
    for (auto& members : blocks) {
        std::vector<const DivisorClass*> dominant;
        for (const auto& c : members) {
            bool ok = true;
            for (const auto& r : model.roots) ok = ok && pairing(c, r) >= 0;
            if (ok) dominant.push_back(&c);
        }
        if (dominant.size() != 1)
            throw Error(ErrorCode::NoDominantRepresentative,
                        "orbit of " + members.front().str() + " has " + std::to_string(dominant.size()) +
                            " dominant members in model " + model.name);
        LineOrbit orbit;
        orbit.representative = *dominant.front();
        orbit.multiplicity = static_cast<std::int64_t>(members.size());
        orbit.pullback_coeffs = mumford_pullback(model, orbit.representative);
        orbit.members = members;
        orbits.push_back(std::move(orbit));
    }
    std::sort(orbits.begin(), orbits.end(), [](const LineOrbit& a, const LineOrbit& b) {
        if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
        return a.representative < b.representative;
    });

    std::size_t total = 0;
    for (const auto& o : orbits) total += static_cast<std::size_t>(o.multiplicity);
    if (total != lines.size())
        throw Error(ErrorCode::NoDominantRepresentative, "orbit multiplicities do not partition the lines");
    return orbits;
}

std::vector<AffineRational> boundary_log_discrepancies(const ContractionModel& model,
                                                       const std::vector<LineOrbit>& orbits) {
    const auto disc = contraction_discrepancies(model);
    std::vector<AffineRational> out;
    out.reserve(model.roots.size());
    for (std::size_t j = 0; j < model.roots.size(); ++j) {
        Rational load = 0;
        for (const auto& o : orbits) load += Rational(o.multiplicity) * o.pullback_coeffs[j];
        out.emplace_back(Rational(1) + disc[j], -load);
    }
    return out;
}

std::vector<AffineRational> boundary_log_discrepancies(const ContractionModel& model) {
    return boundary_log_discrepancies(model, line_orbits(model));
}

std::optional<Rational> instability_threshold(const ContractionModel& model, const Rational& cmax) {
    if (cmax.sign() <= 0) throw Error(ErrorCode::OutOfRange, "cmax must be positive, got " + cmax.str());
    std::optional<Rational> best;
    for (const auto& a : boundary_log_discrepancies(model)) {
        auto z = positive_zero(a);
        if (z && *z < cmax && (!best || *z < *best)) best = z;
    }
    return best;
}

std::int64_t volume_bound_max_order(std::int64_t degree) {
    if (degree < 1 || degree > 9) throw Error(ErrorCode::OutOfRange, "degree must be in [1, 9], got " + std::to_string(degree));
    return 9 / degree;
}

}  // namespace kstab

#include "ecdlab/families.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace ecdlab {

const char* family_name(Family family) {
    switch (family) {
        case Family::d1: return "D1";
        case Family::d2: return "D2";
        case Family::d3: return "D3";
        case Family::d0: return "D0";
    }
    throw std::logic_error("family_name: unknown family");
}

Family parse_family(const std::string& name) {
    std::string lower;
    for (char c : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower == "d1") return Family::d1;
    if (lower == "d2") return Family::d2;
    if (lower == "d3") return Family::d3;
    if (lower == "d0") return Family::d0;
    throw std::invalid_argument("unknown family '" + name + "' (expected d1, d2, d3 or d0)");
}

namespace {

std::string json_members(const VertexSet& s) {
    std::string out = "[";
    bool first = true;
    for (int v = s.first(); v >= 0; v = s.next(v)) {
        if (!first) out += ", ";
        out += std::to_string(v);
        first = false;
    }
    return out + "]";
}

std::string d1_json(const D1Witness& w) {
    return std::string("{\"family\": \"D1\", \"w\": ") + json_members(w.w) +
           ", \"z\": " + json_members(w.z) + ", \"vp\": " + json_members(w.vp) +
           ", \"trivial\": " + (w.trivial ? "true" : "false") + "}";
}

std::string d2_json(const D2Witness& w) {
    return std::string("{\"family\": \"D2\", \"u1\": ") + json_members(w.u1) +
           ", \"u2\": " + json_members(w.u2) + ", \"u3\": " + json_members(w.u3) + "}";
}

} // namespace

std::string FamilyWitness::to_json() const {
    switch (family) {
        case Family::d1: return d1_json(as_d1());
        case Family::d2: return d2_json(as_d2());
        case Family::d3: {
            const D3Witness& w = as_d3();
            return std::string("{\"family\": \"D3\", \"part1\": ") + json_members(w.part1) +
                   ", \"part2\": " + json_members(w.part2) + ", \"d1\": " + d1_json(w.d1) +
                   ", \"d2\": " + d2_json(w.d2) + "}";
        }
        case Family::d0: {
            const D0Witness& w = as_d0();
            return std::string("{\"family\": \"D0\", \"s\": ") + json_members(w.s) +
                   ", \"sp\": " + json_members(w.sp) + "}";
        }
    }
    throw std::logic_error("FamilyWitness::to_json: unknown family");
}

namespace {

/// Translate a set of original labels into the labels of an induced subdigraph.
VertexSet to_induced_labels(const Digraph::Induced& ind, const VertexSet& original) {
    VertexSet out(ind.graph.vertex_count());
    for (int i = 0; i < static_cast<int>(ind.vertices.size()); ++i)
        if (original.contains(ind.vertices[i])) out.add(i);
    return out;
}

/// Translate induced labels back to the original labelling.
VertexSet to_original_labels(const Digraph::Induced& ind, const VertexSet& induced, int universe) {
    VertexSet out(universe);
    for (int i = induced.first(); i >= 0; i = induced.next(i)) out.add(ind.vertices[i]);
    return out;
}

bool valid_d1_blocks(const Digraph& d, const VertexSet& w, const VertexSet& z,
                     const VertexSet& vp) {
    for (const Arc& arc : d.arcs()) {
        bool tail_w = w.contains(arc.first), tail_z = z.contains(arc.first);
        bool head_w = w.contains(arc.second), head_z = z.contains(arc.second);
        if ((tail_w && head_z) || (tail_z && head_w)) return false;
    }
    Digraph::Induced w_side = d.induced(w | vp);
    if (!is_ecd_set(w_side.graph, to_induced_labels(w_side, w))) return false;
    Digraph::Induced z_side = d.induced(z | vp);
    return is_ecd_set(z_side.graph, to_induced_labels(z_side, z));
}

bool valid_d2_blocks(const Digraph& d, const VertexSet& u1, const VertexSet& u2,
                     const VertexSet& u3) {
    for (const Arc& arc : d.arcs()) {
        bool ok = (u1.contains(arc.first) && u2.contains(arc.second)) ||
                  (u2.contains(arc.first) && u3.contains(arc.second)) ||
                  (u3.contains(arc.first) && u1.contains(arc.second));
        if (!ok) return false;
    }
    auto covered_once = [&](const VertexSet& block, const VertexSet& dominators) {
        for (int v = block.first(); v >= 0; v = block.next(v))
            if ((d.in_neighbors(v) & dominators).count() != 1) return false;
        return true;
    };
    return covered_once(u2, u1) && covered_once(u3, u2) && covered_once(u1, u3);
}

void check_family_bound(const char* op, const Digraph& d, const SearchLimits& limits) {
    if (d.vertex_count() > limits.family_bound)
        throw bound_error(std::string(op) + ": " + std::to_string(d.vertex_count()) +
                          " vertices exceeds family search bound " +
                          std::to_string(limits.family_bound));
}

/// Enumerates three-way assignments of vertices 1..n-1 (vertex 0's block is
/// fixed by the caller) as base-3 counters, invoking visit(assignment) until
/// it returns true; returns whether any call succeeded.
bool for_each_assignment(int n, int fixed_first,
                         const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> assign(static_cast<size_t>(n), 0);
    assign[0] = fixed_first;
    while (true) {
        if (visit(assign)) return true;
        int i = n - 1;
        while (i >= 1 && assign[static_cast<size_t>(i)] == 2) {
            assign[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 1) return false;
        ++assign[static_cast<size_t>(i)];
    }
}

std::optional<D2Witness> recognize_d2_impl(const Digraph& d, const SearchLimits& limits) {
    check_family_bound("recognize(D2)", d, limits);
    const int n = d.vertex_count();
    if (n < 3) return std::nullopt; // three nonempty blocks needed
    std::optional<D2Witness> found;
    // canonical rotation: vertex 0 sits in U1
    for_each_assignment(n, 0, [&](const std::vector<int>& assign) {
        VertexSet u1(n), u2(n), u3(n);
        for (int v = 0; v < n; ++v) {
            if (assign[static_cast<size_t>(v)] == 0) u1.add(v);
            else if (assign[static_cast<size_t>(v)] == 1) u2.add(v);
            else u3.add(v);
        }
        if (u1.empty() || u2.empty() || u3.empty()) return false;
        if (!valid_d2_blocks(d, u1, u2, u3)) return false;
        found = D2Witness{u1, u2, u3};
        return true;
    });
    return found;
}

std::optional<D3Witness> recognize_d3_impl(const Digraph& d, const SearchLimits& limits) {
    check_family_bound("recognize(D3)", d, limits);
    const int n = d.vertex_count();
    if (n >= 31) throw bound_error("recognize(D3): bipartition search limited to 30 vertices");
    if (n < 4) return std::nullopt; // at least one D1 member plus three D2 vertices
    const std::vector<Arc> arcs = d.arcs();
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        VertexSet part1(n), part2(n);
        for (int v = 0; v < n; ++v)
            (mask >> v & 1u ? part1 : part2).add(v);

        VertexSet cross_tails(n);
        bool shape_ok = true;
        int cross_count = 0;
        for (const Arc& arc : arcs) {
            if (part2.contains(arc.first) && part1.contains(arc.second)) {
                shape_ok = false;
                break;
            }
            if (part1.contains(arc.first) && part2.contains(arc.second)) {
                cross_tails.add(arc.first);
                ++cross_count;
            }
        }
        if (!shape_ok || cross_count == 0) continue;

        Digraph::Induced two = d.induced(part2);
        std::optional<D2Witness> d2 = recognize_d2_impl(two.graph, limits);
        if (!d2) continue;

        Digraph::Induced one = d.induced(part1);
        std::optional<D1Witness> d1 =
            recognize_d1_requiring(one.graph, to_induced_labels(one, cross_tails), limits);
        if (!d1) continue;

        D3Witness witness;
        witness.part1 = part1;
        witness.part2 = part2;
        witness.d1 = D1Witness{to_original_labels(one, d1->w, n), to_original_labels(one, d1->z, n),
                               to_original_labels(one, d1->vp, n), d1->trivial};
        witness.d2 = D2Witness{to_original_labels(two, d2->u1, n),
                               to_original_labels(two, d2->u2, n),
                               to_original_labels(two, d2->u3, n)};
        return witness;
    }
    return std::nullopt;
}

std::optional<D0Witness> recognize_d0_impl(const Digraph& f, const SearchLimits& limits) {
    const int n = f.vertex_count();
    for (const VertexSet& s : enumerate_ecd_sets(f, limits)) {
        Digraph::Induced rest = f.induced(s.complement());
        for (const VertexSet& sp_local : enumerate_ecd_sets(rest.graph, limits)) {
            VertexSet sp = to_original_labels(rest, sp_local, n);
            bool back_arc = false;
            for (int v = sp.first(); v >= 0 && !back_arc; v = sp.next(v))
                back_arc = f.out_neighbors(v).intersects(s);
            if (!back_arc) return D0Witness{s, sp};
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<D1Witness> recognize_d1_requiring(const Digraph& d, const VertexSet& require_in_vp,
                                                const SearchLimits& limits) {
    check_family_bound("recognize(D1)", d, limits);
    const int n = d.vertex_count();
    if (n == 0) return std::nullopt;
    if (n == 1) {
        // the trivial member: one vertex, no loop, nothing forced into Vp
        if (d.arc_count() == 0 && require_in_vp.empty()) {
            D1Witness w{VertexSet::of(1, {0}), VertexSet(1), VertexSet(1), true};
            return w;
        }
        return std::nullopt;
    }
    std::optional<D1Witness> found;
    // vertex 0 lands in W or Vp: W/Z symmetry is broken by min(W) < min(Z)
    for (int first_block : {0, 2}) {
        if (found) break;
        for_each_assignment(n, first_block, [&](const std::vector<int>& assign) {
            VertexSet w(n), z(n), vp(n);
            for (int v = 0; v < n; ++v) {
                if (assign[static_cast<size_t>(v)] == 0) w.add(v);
                else if (assign[static_cast<size_t>(v)] == 1) z.add(v);
                else vp.add(v);
            }
            if (w.empty() || z.empty() || vp.empty()) return false;
            if (w.first() > z.first()) return false; // canonical: min(W) < min(Z)
            if (!require_in_vp.is_subset_of(vp)) return false;
            if (!valid_d1_blocks(d, w, z, vp)) return false;
            found = D1Witness{w, z, vp, false};
            return true;
        });
    }
    return found;
}

std::optional<FamilyWitness> recognize(Family family, const Digraph& d,
                                       const SearchLimits& limits) {
    switch (family) {
        case Family::d1: {
            auto w = recognize_d1_requiring(d, VertexSet(d.vertex_count()), limits);
            if (!w) return std::nullopt;
            return FamilyWitness{Family::d1, *w};
        }
        case Family::d2: {
            auto w = recognize_d2_impl(d, limits);
            if (!w) return std::nullopt;
            return FamilyWitness{Family::d2, *w};
        }
        case Family::d3: {
            auto w = recognize_d3_impl(d, limits);
            if (!w) return std::nullopt;
            return FamilyWitness{Family::d3, *w};
        }
        case Family::d0: {
            auto w = recognize_d0_impl(d, limits);
            if (!w) return std::nullopt;
            return FamilyWitness{Family::d0, *w};
        }
    }
    throw std::logic_error("recognize: unknown family");
}

namespace {

/// Checks that the given blocks are nonempty and exactly partition 0..n-1.
void check_partition(const char* op, const std::vector<std::vector<int>>& blocks, int n) {
    std::vector<int> seen(static_cast<size_t>(n), 0);
    for (const auto& block : blocks) {
        if (block.empty()) throw std::invalid_argument(std::string(op) + ": empty partition block");
        for (int v : block) {
            if (v < 0 || v >= n)
                throw std::invalid_argument(std::string(op) + ": partition member " +
                                            std::to_string(v) + " outside 0.." +
                                            std::to_string(n - 1));
            if (seen[static_cast<size_t>(v)]++)
                throw std::invalid_argument(std::string(op) + ": vertex " + std::to_string(v) +
                                            " appears in two blocks");
        }
    }
    for (int v = 0; v < n; ++v)
        if (!seen[static_cast<size_t>(v)])
            throw std::invalid_argument(std::string(op) + ": vertex " + std::to_string(v) +
                                        " missing from the partition");
}

} // namespace

ConstructedMember construct_d1(const Digraph& dp, const std::vector<std::vector<int>>& pi1,
                               const std::vector<std::vector<int>>& pi2,
                               const std::vector<Arc>& b) {
    const int n = dp.vertex_count();
    if (pi1.empty() || pi2.empty())
        throw std::invalid_argument("construct_d1: partitions must have at least one block");
    check_partition("construct_d1", pi1, n);
    check_partition("construct_d1", pi2, n);
    const int p = static_cast<int>(pi1.size());
    const int r = static_cast<int>(pi2.size());
    const int total = n + p + r;

    std::vector<Arc> arcs = dp.arcs();
    for (int i = 0; i < p; ++i)
        for (int v : pi1[static_cast<size_t>(i)]) arcs.emplace_back(n + i, v);
    for (int j = 0; j < r; ++j)
        for (int v : pi2[static_cast<size_t>(j)]) arcs.emplace_back(n + p + j, v);
    for (const Arc& arc : b) {
        if (arc.first < 0 || arc.first >= n)
            throw std::invalid_argument("construct_d1: extra arc must start in the seed digraph");
        if (arc.second < n || arc.second >= total)
            throw std::invalid_argument("construct_d1: extra arc must end in a new W or Z vertex");
        arcs.push_back(arc);
    }

    D1Witness witness;
    witness.w = VertexSet(total);
    witness.z = VertexSet(total);
    witness.vp = VertexSet(total);
    for (int v = 0; v < n; ++v) witness.vp.add(v);
    for (int i = 0; i < p; ++i) witness.w.add(n + i);
    for (int j = 0; j < r; ++j) witness.z.add(n + p + j);
    witness.trivial = false;
    return ConstructedMember{Digraph(total, arcs), FamilyWitness{Family::d1, witness}};
}

ConstructedMember construct_d2(int n1, int n2, int n3, const std::vector<int>& dominator_in_u1,
                               const std::vector<int>& dominator_in_u2,
                               const std::vector<int>& dominator_in_u3) {
    if (n1 < 1 || n2 < 1 || n3 < 1)
        throw std::invalid_argument("construct_d2: every block must be nonempty");
    auto check_map = [](const char* which, const std::vector<int>& map, int dominated,
                        int dominators) {
        if (static_cast<int>(map.size()) != dominated)
            throw std::invalid_argument(std::string("construct_d2: ") + which +
                                        " must assign exactly one dominator per vertex");
        for (int idx : map)
            if (idx < 0 || idx >= dominators)
                throw std::invalid_argument(std::string("construct_d2: ") + which +
                                            " refers to a vertex outside the dominating block");
    };
    check_map("U2 map", dominator_in_u1, n2, n1);
    check_map("U3 map", dominator_in_u2, n3, n2);
    check_map("U1 map", dominator_in_u3, n1, n3);

    const int total = n1 + n2 + n3;
    std::vector<Arc> arcs;
    for (int j = 0; j < n2; ++j) arcs.emplace_back(dominator_in_u1[static_cast<size_t>(j)], n1 + j);
    for (int j = 0; j < n3; ++j)
        arcs.emplace_back(n1 + dominator_in_u2[static_cast<size_t>(j)], n1 + n2 + j);
    for (int j = 0; j < n1; ++j)
        arcs.emplace_back(n1 + n2 + dominator_in_u3[static_cast<size_t>(j)], j);

    D2Witness witness{VertexSet(total), VertexSet(total), VertexSet(total)};
    for (int v = 0; v < n1; ++v) witness.u1.add(v);
    for (int v = 0; v < n2; ++v) witness.u2.add(n1 + v);
    for (int v = 0; v < n3; ++v) witness.u3.add(n1 + n2 + v);
    return ConstructedMember{Digraph(total, arcs), FamilyWitness{Family::d2, witness}};
}

ConstructedMember construct_dpr(const Digraph& d, const std::vector<std::vector<int>>& w_partition,
                                const std::vector<Arc>& b,
                                const std::vector<std::vector<int>>& z_partition,
                                const std::vector<Arc>& b_prime) {
    const int n = d.vertex_count();
    if (d.arc_count() == 0) {
        // arcless seed: both stages collapse and the digraph is its own result
        D0Witness witness{VertexSet::full(n), VertexSet(n)};
        return ConstructedMember{d, FamilyWitness{Family::d0, witness}};
    }

    if (w_partition.empty() || z_partition.empty())
        throw std::invalid_argument("construct_dpr: partitions must have at least one block");
    check_partition("construct_dpr (stage 1)", w_partition, n);
    const int p = static_cast<int>(w_partition.size());
    const int np = n + p; // vertex count of the stage-1 digraph
    check_partition("construct_dpr (stage 2)", z_partition, np);
    const int r = static_cast<int>(z_partition.size());
    const int total = np + r;

    std::vector<Arc> arcs = d.arcs();
    for (int i = 0; i < p; ++i)
        for (int v : w_partition[static_cast<size_t>(i)]) arcs.emplace_back(n + i, v);
    for (const Arc& arc : b) {
        if (arc.first < 0 || arc.first >= n)
            throw std::invalid_argument("construct_dpr: stage-1 extra arc must start in the seed");
        if (arc.second < n || arc.second >= np)
            throw std::invalid_argument("construct_dpr: stage-1 extra arc must end in a w vertex");
        arcs.push_back(arc);
    }
    for (int j = 0; j < r; ++j)
        for (int u : z_partition[static_cast<size_t>(j)]) arcs.emplace_back(np + j, u);
    for (const Arc& arc : b_prime) {
        if (arc.first < 0 || arc.first >= n)
            throw std::invalid_argument("construct_dpr: stage-2 extra arc must start in the seed");
        if (arc.second < np || arc.second >= total)
            throw std::invalid_argument("construct_dpr: stage-2 extra arc must end in a z vertex");
        arcs.push_back(arc);
    }

    D0Witness witness{VertexSet(total), VertexSet(total)};
    for (int j = 0; j < r; ++j) witness.s.add(np + j);
    for (int i = 0; i < p; ++i) witness.sp.add(n + i);
    return ConstructedMember{Digraph(total, arcs), FamilyWitness{Family::d0, witness}};
}

} // namespace ecdlab

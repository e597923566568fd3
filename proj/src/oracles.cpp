#include "rgh/oracles.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>

#include "rgh/orientation.hpp"

namespace rgh {

std::vector<TreeShape> planar_trees(int leaves) {
    std::vector<TreeShape> out;
    if (leaves <= 0) return out;
    if (leaves == 1) {
        out.emplace_back();
        return out;
    }
    std::vector<TreeShape> acc;
    std::function<void(int)> build = [&](int left) {
        if (left == 0) {
            if (acc.size() >= 2) {
                TreeShape t;
                t.children = acc;
                out.push_back(std::move(t));
            }
            return;
        }
        for (int take = 1; take <= left; ++take) {
            if (acc.empty() && take == leaves) continue; // a lone child is no tree
            for (const TreeShape& child : planar_trees(take)) {
                acc.push_back(child);
                build(left - take);
                acc.pop_back();
            }
        }
    };
    build(leaves);
    return out;
}

int internal_nodes(const TreeShape& t) {
    if (t.leaf()) return 0;
    int n = 1;
    for (const auto& c : t.children) n += internal_nodes(c);
    return n;
}

std::map<int, long> tree_counts(int r) {
    if (r < 3) throw std::invalid_argument("tree_counts needs r >= 3");
    // root at leaf r; the remaining leaves 1..r-1 hang off an ordered tree
    // whose internal nodes each carry >= 2 children (>= 3 with the parent edge)
    std::map<int, long> out;
    for (const auto& t : planar_trees(r - 1)) {
        if (t.leaf()) continue;
        ++out[internal_nodes(t) - 1];
    }
    return out;
}

std::vector<std::vector<int>> brute_automorphisms(const RibbonGraph& g) {
    const int n = g.half_edges();
    const auto verts = vertex_cycles(g);
    const auto vidx = vertex_index_of(g);
    std::vector<std::vector<int>> out;
    for (int k = 0; k < n; ++k) {
        std::vector<int> phi(n, -1);
        phi[0] = k;
        std::vector<int> stack{0};
        bool ok = true;
        while (ok && !stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            const int images[2][2] = {{g.next[x], g.next[phi[x]]},
                                      {g.mate[x], g.mate[phi[x]]}};
            for (const auto& im : images) {
                if (phi[im[0]] == -1) {
                    phi[im[0]] = im[1];
                    stack.push_back(im[0]);
                } else if (phi[im[0]] != im[1]) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        std::vector<char> hit(n, 0);
        for (int x = 0; x < n && ok; ++x) {
            if (phi[x] < 0 || hit[phi[x]]) ok = false;
            else hit[phi[x]] = 1;
        }
        for (std::size_t j = 0; j < g.tails.size() && ok; ++j)
            ok = phi[g.tails[j]] == g.tails[j];
        for (std::size_t j = 0; j < g.marks.size() && ok; ++j)
            ok = vidx[phi[verts[g.marks[j]][0]]] == g.marks[j];
        if (ok) out.push_back(std::move(phi));
    }
    return out;
}

namespace {

constexpr int kLiteralRotationLimit = 8;

struct NaiveRun {
    Signature sig;
    long max_steps = 0;
    long steps = 0;
    std::map<CanonicalCode, RibbonGraph> classes;

    void tick() {
        if (++steps > max_steps)
            throw BudgetExceeded("reference enumeration step budget exceeded",
                                 CellBasis{sig, {}, true});
    }

    void offer(const RibbonGraph& g) {
        tick();
        if (!validate(g).empty()) return;
        if (signature_of(g) != sig) return;
        if (!tails_in_boundary_order(g)) return;
        auto cf = canonicalize(g);
        classes.emplace(std::move(cf.code), std::move(cf.graph));
    }

    // every assignment of labels 1..r to the fixed points (small r), leaving
    // the order filter to `offer`
    void offer_all_orders(const RibbonGraph& g) {
        std::vector<int> fixed;
        for (int x = 0; x < g.half_edges(); ++x)
            if (g.mate[x] == x) fixed.push_back(x);
        if (static_cast<int>(fixed.size()) != sig.r) return;
        if (sig.r == 0) {
            RibbonGraph cand = g;
            cand.tails.clear();
            offer(cand);
            return;
        }
        if (sig.r <= 5) {
            std::sort(fixed.begin(), fixed.end());
            do {
                RibbonGraph cand = g;
                cand.tails = fixed;
                offer(cand);
            } while (std::next_permutation(fixed.begin(), fixed.end()));
            return;
        }
        // larger r: build only the label orders the catalog admits, cycle by
        // cycle (label set plus starting point)
        std::vector<std::vector<int>> slots;
        for (const auto& cyc : boundary_cycles(g)) {
            std::vector<int> cs;
            for (int x : cyc)
                if (g.mate[x] == x) cs.push_back(x);
            slots.push_back(std::move(cs));
        }
        std::vector<int> pool(sig.r);
        for (int j = 0; j < sig.r; ++j) pool[j] = j + 1;
        std::vector<int> tails(sig.r, -1);
        std::function<void(std::size_t)> on_cycle = [&](std::size_t ci) {
            if (ci == slots.size()) {
                RibbonGraph cand = g;
                cand.tails = tails;
                offer(cand);
                return;
            }
            const auto& cs = slots[ci];
            const int k = static_cast<int>(cs.size());
            if (k == 0) {
                on_cycle(ci + 1);
                return;
            }
            std::vector<int> subset; // per level: deeper cycles pick their own
            std::function<void(std::size_t, int)> pick = [&](std::size_t from, int need) {
                if (need == 0) {
                    auto pool_saved = pool;
                    std::vector<int> rest;
                    std::size_t si = 0;
                    for (int l : pool) {
                        if (si < subset.size() && subset[si] == l) ++si;
                        else rest.push_back(l);
                    }
                    pool = rest;
                    for (int rot = 0; rot < k; ++rot) {
                        for (int j = 0; j < k; ++j)
                            tails[subset[j] - 1] = cs[(rot + j) % k];
                        on_cycle(ci + 1);
                    }
                    pool = pool_saved;
                    return;
                }
                for (std::size_t p = from; p + need <= pool.size(); ++p) {
                    subset.push_back(pool[p]);
                    pick(p + 1, need - 1);
                    subset.pop_back();
                }
            };
            pick(0, k);
        };
        on_cycle(0);
    }

    // all pairings of the rotation's half-edges with exactly r fixed points
    void all_pairings(RibbonGraph& g, int from, int tails_left, int unassigned) {
        if (tails_left > unassigned) return;
        int x = from;
        const int n = g.half_edges();
        while (x < n && g.mate[x] >= 0) ++x;
        if (x == n) {
            if (tails_left == 0) offer_all_orders(g);
            return;
        }
        tick();
        if (tails_left > 0) {
            g.mate[x] = x;
            all_pairings(g, x + 1, tails_left - 1, unassigned - 1);
            g.mate[x] = -1;
        }
        for (int y = x + 1; y < n; ++y) {
            if (g.mate[y] >= 0) continue;
            g.mate[x] = y;
            g.mate[y] = x;
            all_pairings(g, x + 1, tails_left, unassigned - 2);
            g.mate[x] = -1;
            g.mate[y] = -1;
        }
    }

    // every rotation on 0..n-1 realizing the given cycle sizes, cycles built
    // smallest-lead-first so each rotation appears once; marks then go on any
    // size-matching cycles
    void all_rotations(int n, std::vector<int> type, const std::vector<int>& marked) {
        RibbonGraph g;
        g.next.assign(n, -1);
        std::vector<char> used(n, 0);
        std::vector<std::vector<int>> cycles;

        std::function<void()> next_cycle = [&]() {
            int lead = 0;
            while (lead < n && used[lead]) ++lead;
            if (lead == n) {
                place_marks(g, cycles, marked, 0);
                return;
            }
            tick();
            int prev_size = -1;
            for (std::size_t ti = 0; ti < type.size(); ++ti) {
                const int size = type[ti];
                if (size == prev_size) continue;
                prev_size = size;
                type.erase(type.begin() + ti);
                std::vector<int> cyc{lead}; // per-level: deeper cycles start fresh
                used[lead] = 1;
                std::function<void()> fill = [&]() {
                    if (static_cast<int>(cyc.size()) == size) {
                        for (std::size_t m = 0; m < cyc.size(); ++m)
                            g.next[cyc[m]] = cyc[(m + 1) % cyc.size()];
                        cycles.push_back(cyc);
                        next_cycle();
                        cycles.pop_back();
                        return;
                    }
                    for (int y = lead + 1; y < n; ++y) {
                        if (used[y]) continue;
                        used[y] = 1;
                        cyc.push_back(y);
                        fill();
                        cyc.pop_back();
                        used[y] = 0;
                    }
                };
                fill();
                used[lead] = 0;
                type.insert(type.begin() + ti, size);
            }
        };
        next_cycle();
    }

    void place_marks(RibbonGraph& g, const std::vector<std::vector<int>>& cycles,
                     const std::vector<int>& marked, std::size_t j) {
        if (j == marked.size()) {
            RibbonGraph cand = g;
            // vertex indices sort cycles by least half-edge
            std::vector<std::pair<int, int>> order; // (least germ, cycle idx)
            for (std::size_t c = 0; c < cycles.size(); ++c)
                order.emplace_back(*std::min_element(cycles[c].begin(), cycles[c].end()),
                                   static_cast<int>(c));
            std::sort(order.begin(), order.end());
            std::vector<int> vertex_of_cycle(cycles.size());
            for (std::size_t p = 0; p < order.size(); ++p)
                vertex_of_cycle[order[p].second] = static_cast<int>(p);
            cand.marks.resize(mark_cycle_.size());
            for (std::size_t m = 0; m < mark_cycle_.size(); ++m)
                cand.marks[m] = vertex_of_cycle[mark_cycle_[m]];
            cand.mate.assign(g.half_edges(), -1);
            all_pairings(cand, 0, sig.r, g.half_edges());
            return;
        }
        for (std::size_t c = 0; c < cycles.size(); ++c) {
            if (static_cast<int>(cycles[c].size()) != marked[j]) continue;
            if (std::find(mark_cycle_.begin(), mark_cycle_.end(), static_cast<int>(c)) !=
                mark_cycle_.end())
                continue;
            mark_cycle_.push_back(static_cast<int>(c));
            place_marks(g, cycles, marked, j + 1);
            mark_cycle_.pop_back();
        }
    }

    // Larger germ counts: the pairing is pinned to dominoes (0,1)(2,3)... with
    // the tail slots after them, and vertex cycles grow germ by germ. A new
    // pair or tail takes the next free name the moment it first appears, and
    // after the first cycle each one starts at the smallest name already in
    // play, so every relabeling class of the pairing is walked exactly once
    // instead of 2^E E! r! times.
    void grow_classes(int e, const std::vector<int>& plain, const std::vector<int>& marked) {
        e_ = e;
        const int n = 2 * e + sig.r;
        g_.next.assign(n, -1);
        g_.mate.assign(n, -1);
        g_.marks.clear();
        g_.tails.clear();
        for (int i = 0; i < e; ++i) {
            g_.mate[2 * i] = 2 * i + 1;
            g_.mate[2 * i + 1] = 2 * i;
        }
        for (int t = 0; t < sig.r; ++t) g_.mate[2 * e + t] = 2 * e + t;
        used_.assign(n, 0);
        next_pair_ = 0;
        next_tail_ = 0;
        plain_left_ = plain; // descending, so equal sizes sit adjacent
        marked_sizes_.assign(marked.begin(), marked.end());
        marked_taken_.assign(marked.size(), 0);
        cyc_.clear();
        done_cycles_.clear();
        done_marks_.clear();
        grow_cycle_start();
    }

  private:
    void grow_cycle_start() {
        tick();
        bool types_left = !plain_left_.empty();
        for (char t : marked_taken_)
            if (!t) types_left = true;
        if (!types_left) {
            grow_leaf();
            return;
        }
        int start = -1;
        for (int x = 0; x < 2 * next_pair_ && start < 0; ++x)
            if (!used_[x]) start = x;
        for (int t = 0; t < next_tail_ && start < 0; ++t)
            if (!used_[2 * e_ + t]) start = 2 * e_ + t;
        bool fresh_pair = false, fresh_tail = false;
        if (start < 0) {
            if (!done_cycles_.empty()) return; // a second component would begin here
            if (e_ > 0) {
                start = 0;
                next_pair_ = 1;
                fresh_pair = true;
            } else if (sig.r > 0) {
                start = 0;
                next_tail_ = 1;
                fresh_tail = true;
            } else {
                return;
            }
        }
        used_[start] = 1;
        cyc_.assign(1, start);
        int prev = -1;
        for (std::size_t i = 0; i < plain_left_.size(); ++i) {
            const int len = plain_left_[i];
            if (len == prev) continue;
            prev = len;
            plain_left_.erase(plain_left_.begin() + i);
            grow_fill(len, -1);
            plain_left_.insert(plain_left_.begin() + i, len);
        }
        for (std::size_t j = 0; j < marked_sizes_.size(); ++j) {
            if (marked_taken_[j]) continue;
            marked_taken_[j] = 1;
            grow_fill(marked_sizes_[j], static_cast<int>(j));
            marked_taken_[j] = 0;
        }
        cyc_.clear();
        used_[start] = 0;
        if (fresh_pair) next_pair_ = 0;
        if (fresh_tail) next_tail_ = 0;
    }

    void grow_fill(int length, int mark_label) {
        if (static_cast<int>(cyc_.size()) == length) {
            for (int m = 0; m < length; ++m)
                g_.next[cyc_[m]] = cyc_[(m + 1) % length];
            done_cycles_.push_back(cyc_);
            done_marks_.push_back(mark_label);
            const auto saved = cyc_; // the next cycle reuses the shared buffer
            grow_cycle_start();
            cyc_ = saved;
            done_marks_.pop_back();
            done_cycles_.pop_back();
            for (int m = 0; m < length; ++m) g_.next[cyc_[m]] = -1;
            return;
        }
        tick();
        auto take = [&](int x) {
            used_[x] = 1;
            cyc_.push_back(x);
            grow_fill(length, mark_label);
            cyc_.pop_back();
            used_[x] = 0;
        };
        for (int x = 0; x < 2 * next_pair_; ++x)
            if (!used_[x]) take(x);
        for (int t = 0; t < next_tail_; ++t)
            if (!used_[2 * e_ + t]) take(2 * e_ + t);
        if (next_pair_ < e_) {
            ++next_pair_;
            take(2 * (next_pair_ - 1));
            --next_pair_;
        }
        if (next_tail_ < sig.r) {
            ++next_tail_;
            take(2 * e_ + next_tail_ - 1);
            --next_tail_;
        }
    }

    void grow_leaf() {
        RibbonGraph cand = g_;
        std::vector<std::pair<int, int>> order; // (least germ, cycle idx)
        for (std::size_t c = 0; c < done_cycles_.size(); ++c)
            order.emplace_back(*std::min_element(done_cycles_[c].begin(), done_cycles_[c].end()),
                               static_cast<int>(c));
        std::sort(order.begin(), order.end());
        std::vector<int> vertex_of_cycle(done_cycles_.size());
        for (std::size_t p = 0; p < order.size(); ++p)
            vertex_of_cycle[order[p].second] = static_cast<int>(p);
        cand.marks.assign(marked_sizes_.size(), -1);
        for (std::size_t c = 0; c < done_cycles_.size(); ++c)
            if (done_marks_[c] >= 0) cand.marks[done_marks_[c]] = vertex_of_cycle[c];
        offer_all_orders(cand);
    }

    std::vector<int> mark_cycle_;
    int e_ = 0;
    RibbonGraph g_;
    std::vector<char> used_;
    int next_pair_ = 0, next_tail_ = 0;
    std::vector<int> plain_left_;
    std::vector<int> marked_sizes_;
    std::vector<char> marked_taken_;
    std::vector<int> cyc_;
    std::vector<std::vector<int>> done_cycles_;
    std::vector<int> done_marks_;
};

void naive_valence_layouts(
    const Signature& sig,
    const std::function<void(int, const std::vector<int>&, const std::vector<int>&)>& emit) {
    for (int e = 0; e <= sig.top_dim(); ++e) {
        const int nv = e + 2 - 2 * sig.g - sig.h;
        const int n_plain = nv - sig.s;
        if (nv < 1 || n_plain < 0) continue;
        const int total = 2 * e + sig.r;
        std::vector<int> plain, marked;
        std::function<void(int, int)> plains = [&](int left, int cap) {
            if (static_cast<int>(plain.size()) == n_plain) {
                if (left == 0) emit(e, plain, marked);
                return;
            }
            for (int v = std::min(cap, left); v >= 3; --v) {
                plain.push_back(v);
                plains(left - v, v);
                plain.pop_back();
            }
        };
        std::function<void(int)> marks = [&](int left) {
            if (static_cast<int>(marked.size()) == sig.s) {
                plains(left, left);
                return;
            }
            for (int v = 1; v <= left; ++v) {
                marked.push_back(v);
                marks(left - v);
                marked.pop_back();
            }
        };
        marks(total);
    }
}

} // namespace

CellBasis naive_enumerate(const Signature& sig, const NaiveLimits& limits) {
    if (!sig.shape_ok())
        throw std::invalid_argument("malformed signature " + sig.str());
    CellBasis basis;
    basis.sig = sig;
    if (sig.excluded()) return basis;
    basis.strata.assign(sig.top_dim() + 1, {});

    NaiveRun run;
    run.sig = sig;
    run.max_steps = limits.max_steps;

    naive_valence_layouts(sig, [&](int e, const std::vector<int>& plain,
                                   const std::vector<int>& marked) {
        const int n = 2 * e + sig.r;
        if (n <= kLiteralRotationLimit) {
            std::vector<int> type = plain;
            type.insert(type.end(), marked.begin(), marked.end());
            std::sort(type.begin(), type.end());
            run.all_rotations(n, type, marked);
        } else {
            run.grow_classes(e, plain, marked);
        }
    });

    for (auto& [code, rep] : run.classes) {
        CellClass cls;
        cls.code = code;
        cls.dim = cell_dimension(rep);
        cls.aut_order = static_cast<int>(automorphisms(rep).size());
        cls.orientable = cls.aut_order == 1 || is_orientable(rep);
        cls.rep = std::move(rep);
        basis.strata[cls.dim].push_back(std::move(cls));
    }
    return basis;
}

} // namespace rgh

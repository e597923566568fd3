#include "rgh/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <functional>

#include "rgh/orientation.hpp"
#include "rgh/parallel.hpp"

namespace rgh {

long CellBasis::total_classes() const {
    long n = 0;
    for (const auto& stratum : strata) n += static_cast<long>(stratum.size());
    return n;
}

std::map<int, long> CellBasis::counts_by_dimension() const {
    std::map<int, long> out;
    for (int d = 0; d < static_cast<int>(strata.size()); ++d)
        if (!strata[d].empty()) out[d] = static_cast<long>(strata[d].size());
    return out;
}

const CellClass* CellBasis::find(int dim, const CanonicalCode& code) const {
    if (dim < 0 || dim >= static_cast<int>(strata.size())) return nullptr;
    const auto& stratum = strata[dim];
    const auto it = std::lower_bound(
        stratum.begin(), stratum.end(), code,
        [](const CellClass& c, const CanonicalCode& k) { return c.code < k; });
    if (it == stratum.end() || it->code != code) return nullptr;
    return &*it;
}

const CellClass* CellBasis::find(const CanonicalCode& code) const {
    for (int d = 0; d < static_cast<int>(strata.size()); ++d)
        if (const CellClass* c = find(d, code)) return c;
    return nullptr;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
    long max_cells = 0;
    bool has_deadline = false;
    Clock::time_point deadline;
    std::atomic<long> cells{0};
    std::atomic<bool> stop{false};

    void setup(const EnumerationLimits& limits) {
        max_cells = limits.max_cells;
        if (limits.max_seconds > 0) {
            has_deadline = true;
            deadline = Clock::now() +
                       std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(limits.max_seconds));
        }
    }
    bool charge_cell() {
        if (max_cells > 0 && cells.fetch_add(1) + 1 > max_cells) stop = true;
        return ok();
    }
    bool check_time() {
        if (has_deadline && Clock::now() > deadline) stop = true;
        return ok();
    }
    bool ok() const { return !stop.load(std::memory_order_relaxed); }
};

// valences for one slice of the search: plain vertices descending, marked
// vertices in interior label order
struct Job {
    int edges = 0;
    std::vector<int> plain;
    std::vector<int> marked;
};

void plain_partitions(int total, int parts, int cap, std::vector<int>& acc,
                      const std::function<void()>& emit) {
    if (parts == 0) {
        if (total == 0) emit();
        return;
    }
    for (int v = std::min(cap, total - 3 * (parts - 1)); v >= 3; --v) {
        acc.push_back(v);
        plain_partitions(total - v, parts - 1, v, acc, emit);
        acc.pop_back();
    }
}

void marked_tuples(int total, int parts, std::vector<int>& acc,
                   const std::function<void()>& emit) {
    if (parts == 0) {
        if (total == 0) emit();
        return;
    }
    for (int v = 1; v <= total - (parts - 1); ++v) {
        acc.push_back(v);
        marked_tuples(total - v, parts - 1, acc, emit);
        acc.pop_back();
    }
}

std::vector<Job> make_jobs(const Signature& sig) {
    std::vector<Job> jobs;
    const int e_max = sig.top_dim();
    const int e_min = std::max(0, std::max(1, sig.s) - 2 + 2 * sig.g + sig.h);
    for (int e = e_min; e <= e_max; ++e) {
        const int nv = e + 2 - 2 * sig.g - sig.h;
        const int n_plain = nv - sig.s;
        if (n_plain < 0) continue;
        const int total = 2 * e + sig.r;
        std::vector<int> marked_acc, plain_acc;
        for (int m = sig.s; m <= total - 3 * n_plain; ++m) {
            marked_tuples(m, sig.s, marked_acc, [&] {
                plain_partitions(total - m, n_plain, total - m, plain_acc,
                                 [&] { jobs.push_back({e, plain_acc, marked_acc}); });
            });
        }
    }
    return jobs;
}

// rotation with one cycle per vertex, germs laid out consecutively
RibbonGraph stars_graph(const Job& job) {
    RibbonGraph g;
    std::vector<int> sizes = job.plain;
    sizes.insert(sizes.end(), job.marked.begin(), job.marked.end());
    int n = 0;
    for (int v : sizes) n += v;
    g.next.resize(n);
    int base = 0;
    for (int v : sizes) {
        for (int m = 0; m < v; ++m) g.next[base + m] = base + (m + 1) % v;
        base += v;
    }
    g.mate.assign(n, -1);
    for (std::size_t j = 0; j < job.marked.size(); ++j)
        g.marks.push_back(static_cast<int>(job.plain.size() + j));
    return g;
}

/**
 * Exhausts the pairings of one stars rotation.  At each completed assignment:
 * cheap validity checks (connected, right boundary count), then a
 * per-vertex rotation-minimality cut (rotating a single vertex's germs is a
 * symmetry of the stars rotation, so any assignment that a rotation strictly
 * lowers is a duplicate of one generated elsewhere), and finally the
 * canonical skeleton form, deduplicated by the caller.
 */
class SkeletonSearch {
  public:
    SkeletonSearch(const Signature& sig, const Job& job, Budget& budget)
        : sig_(sig), budget_(budget), base_(stars_graph(job)) {
        n_ = base_.half_edges();
        mate_.assign(n_, -1);
        unassigned_ = n_;
        tails_left_ = sig.r;
        offsets_.clear();
        int off = 0;
        for (const auto* part : {&job.plain, &job.marked})
            for (int v : *part) {
                offsets_.push_back(off);
                sizes_.push_back(v);
                off += v;
            }
        stamp_.assign(n_, 0);
        stack_.reserve(n_);
        gamma_.resize(n_);
        gamma_inv_.resize(n_);
    }

    void run(const std::function<void(CanonicalForm&&)>& emit) {
        emit_ = &emit;
        extend(0);
    }

  private:
    void extend(int from) {
        if ((++nodes_ & 0x3fff) == 0 && !budget_.check_time()) return;
        if (!budget_.ok()) return;
        if (unassigned_ < tails_left_ || (unassigned_ - tails_left_) % 2 != 0) return;
        int x = from;
        while (x < n_ && mate_[x] >= 0) ++x;
        if (x == n_) {
            complete();
            return;
        }
        if (tails_left_ > 0) {
            mate_[x] = x;
            --tails_left_;
            --unassigned_;
            extend(x + 1);
            mate_[x] = -1;
            ++tails_left_;
            ++unassigned_;
        }
        for (int y = x + 1; y < n_; ++y) {
            if (mate_[y] >= 0) continue;
            mate_[x] = y;
            mate_[y] = x;
            unassigned_ -= 2;
            extend(x + 1);
            mate_[x] = -1;
            mate_[y] = -1;
            unassigned_ += 2;
        }
    }

    bool connected() {
        const int epoch = ++epoch_;
        stack_.clear();
        stack_.push_back(0);
        stamp_[0] = epoch;
        int reached = 1;
        while (!stack_.empty()) {
            const int x = stack_.back();
            stack_.pop_back();
            for (int y : {base_.next[x], mate_[x]}) {
                if (stamp_[y] != epoch) {
                    stamp_[y] = epoch;
                    ++reached;
                    stack_.push_back(y);
                }
            }
        }
        return reached == n_;
    }

    int boundary_count() {
        const int epoch = ++epoch_;
        int cycles = 0;
        for (int x = 0; x < n_; ++x) {
            if (stamp_[x] == epoch) continue;
            ++cycles;
            for (int y = x; stamp_[y] != epoch; y = base_.next[mate_[y]]) stamp_[y] = epoch;
        }
        return cycles;
    }

    bool rotation_minimal() {
        for (std::size_t v = 0; v < sizes_.size(); ++v) {
            const int off = offsets_[v], m = sizes_[v];
            for (int t = 1; t < m; ++t) {
                for (int y = 0; y < n_; ++y) {
                    gamma_[y] = y;
                    gamma_inv_[y] = y;
                }
                for (int p = 0; p < m; ++p) {
                    gamma_[off + p] = off + (p + t) % m;
                    gamma_inv_[off + (p + t) % m] = off + p;
                }
                for (int y = 0; y < n_; ++y) {
                    const int a = gamma_[mate_[gamma_inv_[y]]];
                    const int b = mate_[y];
                    if (a == b) continue;
                    if (a < b) return false;
                    break;
                }
            }
        }
        return true;
    }

    void complete() {
        if (!connected()) return;
        if (boundary_count() != sig_.h) return;
        if (!rotation_minimal()) return;
        RibbonGraph skel = base_;
        skel.mate = mate_;
        for (int x = 0; x < n_; ++x)
            if (mate_[x] == x) skel.tails.push_back(x);
        auto cf = canonicalize(skel, /*with_labels=*/false);
        // the representative's tails come out in relabeled placeholder order;
        // normalize to its own fixed points, ascending
        cf.graph.tails.clear();
        for (int x = 0; x < n_; ++x)
            if (cf.graph.mate[x] == x) cf.graph.tails.push_back(x);
        (*emit_)(std::move(cf));
    }

    Signature sig_;
    Budget& budget_;
    RibbonGraph base_;
    int n_ = 0;
    std::vector<int> mate_;
    int unassigned_ = 0;
    int tails_left_ = 0;
    std::vector<int> offsets_, sizes_;
    std::vector<int> stamp_;
    int epoch_ = 0;
    std::vector<int> stack_;
    std::vector<int> gamma_, gamma_inv_;
    long nodes_ = 0;
    const std::function<void(CanonicalForm&&)>* emit_ = nullptr;
};

// All placements of labels 1..r on a skeleton's tails with every boundary
// cycle reading its labels in increasing cyclic order: a set partition of the
// labels across cycles plus one rotation choice per cycle.
void labeled_graphs(const RibbonGraph& skel, int r,
                    const std::function<void(RibbonGraph&&)>& emit) {
    if (r == 0) {
        RibbonGraph g = skel;
        g.tails.clear();
        emit(std::move(g));
        return;
    }
    std::vector<std::vector<int>> slots;
    for (const auto& cyc : boundary_cycles(skel)) {
        std::vector<int> cycle_slots;
        for (int x : cyc)
            if (skel.mate[x] == x) cycle_slots.push_back(x);
        slots.push_back(std::move(cycle_slots));
    }

    std::vector<int> remaining(r);
    for (int j = 0; j < r; ++j) remaining[j] = j + 1;
    std::vector<int> tails(r, -1);

    std::function<void(std::size_t)> place_cycle = [&](std::size_t ci) {
        if (ci == slots.size()) {
            RibbonGraph g = skel;
            g.tails = tails;
            assert(tails_in_boundary_order(g));
            emit(std::move(g));
            return;
        }
        const auto& cycle_slots = slots[ci];
        const int k = static_cast<int>(cycle_slots.size());
        if (k == 0) {
            place_cycle(ci + 1);
            return;
        }
        // choose which labels live on this cycle; per level, since deeper
        // cycles pick their own while this one's picks are still pending
        std::vector<int> chosen;
        std::function<void(std::size_t, int)> choose = [&](std::size_t from, int need) {
            if (need == 0) {
                // ...and where the least of them starts
                std::vector<int> labels = chosen;
                std::vector<int> rest;
                std::size_t li = 0;
                for (int l : remaining) {
                    if (li < labels.size() && labels[li] == l) ++li;
                    else rest.push_back(l);
                }
                const auto saved = remaining;
                remaining = rest;
                for (int rot = 0; rot < k; ++rot) {
                    for (int j = 0; j < k; ++j)
                        tails[labels[j] - 1] = cycle_slots[(rot + j) % k];
                    place_cycle(ci + 1);
                }
                remaining = saved;
                return;
            }
            for (std::size_t p = from; p + need <= remaining.size(); ++p) {
                chosen.push_back(remaining[p]);
                choose(p + 1, need - 1);
                chosen.pop_back();
            }
        };
        choose(0, k);
    };
    place_cycle(0);
}

} // namespace

CellBasis enumerate_cells(const Signature& sig, const EnumerationLimits& limits,
                          int threads) {
    if (!sig.shape_ok())
        throw std::invalid_argument("malformed signature " + sig.str());
    CellBasis basis;
    basis.sig = sig;
    if (sig.excluded()) return basis;
    const int top = sig.top_dim();
    assert(top >= 0);
    basis.strata.assign(top + 1, {});
    if (threads <= 0) threads = 1;

    Budget budget;
    budget.setup(limits);

    const auto jobs = make_jobs(sig);
    std::vector<std::map<CanonicalCode, RibbonGraph>> job_skels(jobs.size());
    parallel_for(jobs.size(), threads, [&](std::size_t j) {
        if (!budget.ok()) return;
        SkeletonSearch search(sig, jobs[j], budget);
        search.run([&](CanonicalForm&& cf) {
            job_skels[j].emplace(std::move(cf.code), std::move(cf.graph));
        });
    });
    if (!budget.ok())
        throw BudgetExceeded("enumeration budget exceeded while collecting skeletons",
                             std::move(basis));

    // distributions differ in valence data, so their skeleton sets are
    // disjoint; concatenating in job order keeps the result reproducible
    std::vector<RibbonGraph> skeletons;
    for (auto& m : job_skels)
        for (auto& [code, g] : m) skeletons.push_back(std::move(g));

    std::vector<std::map<CanonicalCode, std::pair<RibbonGraph, int>>> labeled(
        skeletons.size());
    parallel_for(skeletons.size(), threads, [&](std::size_t i) {
        if (!budget.check_time()) return;
        labeled_graphs(skeletons[i], sig.r, [&](RibbonGraph&& g) {
            auto cf = canonicalize(g);
            labeled[i].emplace(std::move(cf.code),
                               std::make_pair(std::move(cf.graph), cf.aut_order));
        });
    });
    if (!budget.ok())
        throw BudgetExceeded("enumeration budget exceeded while labeling skeletons",
                             std::move(basis));

    std::map<CanonicalCode, std::pair<RibbonGraph, int>> classes;
    for (auto& m : labeled) {
        for (auto& entry : m) {
            if (classes.emplace(std::move(entry.first), std::move(entry.second)).second) {
                if (!budget.charge_cell()) {
                    for (auto& [code, rep] : classes) {
                        CellClass cls{code, rep.first, cell_dimension(rep.first),
                                      rep.second, true};
                        basis.strata[cls.dim].push_back(std::move(cls));
                    }
                    throw BudgetExceeded("cell budget exceeded", std::move(basis));
                }
            }
        }
    }

    for (auto& [code, rep] : classes) {
        CellClass cls;
        cls.code = code;
        cls.dim = cell_dimension(rep.first);
        cls.aut_order = rep.second;
        // only a nontrivial symmetry can reverse orientation
        cls.orientable = rep.second == 1 || is_orientable(rep.first);
        cls.rep = std::move(rep.first);
        assert(cls.dim >= 0 && cls.dim <= top);
        assert(cls.dim == top - cls.rep.internal_edges());
        basis.strata[cls.dim].push_back(std::move(cls));
    }
    return basis;
}

} // namespace rgh

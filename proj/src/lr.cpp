#include "plethz/lr.hpp"

#include <algorithm>

#include "plethz/memo.hpp"

namespace plethz {

namespace {

// Cells of a skew shape in reverse reading order (rows top to bottom, right
// to left within a row), with neighbour links for incremental constraints.
struct SkewCells {
    struct Cell {
        int right = -1; // index of cell at (r, c+1)
        int above = -1; // index of cell at (r-1, c)
        int row = 0;
    };
    std::vector<Cell> cells;
    int rows = 0;

    SkewCells(const Partition& outer, const Partition& inner) {
        rows = (int)outer.length();
        std::vector<std::vector<int>> idx(rows);
        int id = 0;
        for (int r = 0; r < rows; ++r) {
            uint32_t lo = inner[r], hi = outer[r];
            idx[r].assign(hi, -1);
            for (uint32_t c = hi; c-- > lo;) {
                Cell cell;
                cell.row = r;
                if (c + 1 < hi) cell.right = idx[r][c + 1];
                if (r > 0 && c < outer[r - 1] && c >= inner[r - 1]) {
                    // cell above exists in the skew
                    cell.above = idx[r - 1][c];
                }
                idx[r][c] = id++;
                cells.push_back(cell);
            }
        }
    }
};

// DFS over LR fillings. cap == nullptr means unrestricted type; otherwise
// counts are bounded by cap and the content must equal it at the end.
// on_done(counts) is called per completed filling; return false to stop.
struct FillEnum {
    const SkewCells& sc;
    const std::vector<uint32_t>* cap;
    std::vector<uint32_t> cnt;
    std::vector<uint32_t> val;
    const std::function<bool(const std::vector<uint32_t>&)>& on_done;
    bool stopped = false;

    FillEnum(const SkewCells& sc_, const std::vector<uint32_t>* cap_,
             const std::function<bool(const std::vector<uint32_t>&)>& done)
        : sc(sc_), cap(cap_), cnt(sc_.rows + 2, 0), val(sc_.cells.size(), 0), on_done(done) {}

    void run() { rec(0); }

    void rec(size_t i) {
        if (stopped) return;
        if (i == sc.cells.size()) {
            if (!on_done(cnt)) stopped = true;
            return;
        }
        const auto& cell = sc.cells[i];
        uint32_t lo = 1, hi = (uint32_t)cell.row + 1;
        if (cell.above >= 0) lo = val[cell.above] + 1;
        if (cell.right >= 0) hi = std::min(hi, val[cell.right]);
        for (uint32_t v = lo; v <= hi; ++v) {
            if (v > 1 && cnt[v - 1] <= cnt[v]) continue; // lattice word
            if (cap && cnt[v] >= (*cap)[v]) continue;
            cnt[v]++;
            val[i] = v;
            rec(i + 1);
            cnt[v]--;
            if (stopped) return;
        }
    }
};

std::vector<uint32_t> cap_from_partition(const Partition& nu, int rows) {
    std::vector<uint32_t> cap(std::max<int>(rows + 2, (int)nu.length() + 2), 0);
    for (size_t j = 0; j < nu.length(); ++j) cap[j + 1] = nu[j];
    return cap;
}

struct SkewKey {
    Partition outer, inner;
    bool operator==(const SkewKey& o) const { return outer == o.outer && inner == o.inner; }
};
struct SkewKeyHash {
    size_t operator()(const SkewKey& k) const {
        return hash_combine(PartitionHash{}(k.outer), PartitionHash{}(k.inner));
    }
};

struct TripleKey {
    Partition a, b, c;
    bool operator==(const TripleKey& o) const { return a == o.a && b == o.b && c == o.c; }
};
struct TripleKeyHash {
    size_t operator()(const TripleKey& k) const {
        return hash_combine(PartitionHash{}(k.a),
                            hash_combine(PartitionHash{}(k.b), PartitionHash{}(k.c)));
    }
};

ConcurrentMemo<TripleKey, u64, TripleKeyHash> g_lr_memo;
ConcurrentMemo<SkewKey, TypeHist, SkewKeyHash> g_hist_memo;

// Drop rows with outer_i == inner_i; they carry no cells and no constraints.
SkewKey normalized_skew(const Partition& outer, const Partition& inner) {
    std::vector<uint32_t> po, pi;
    for (size_t r = 0; r < outer.length(); ++r) {
        if (outer[r] == inner[r]) continue;
        po.push_back(outer[r]);
        pi.push_back(inner[r]);
    }
    return SkewKey{Partition::from_sorted(std::move(po)), Partition::from_sorted(std::move(pi))};
}

u64 count_fillings_of_type(const Partition& outer, const Partition& inner, const Partition& nu) {
    SkewCells sc(outer, inner);
    auto cap = cap_from_partition(nu, sc.rows);
    if (nu.length() > (size_t)sc.rows + 1) {
        // more distinct values than rows is impossible (columns strict)
        bool fits = nu.length() <= (size_t)sc.rows;
        if (!fits) return 0;
    }
    u64 count = 0;
    std::function<bool(const std::vector<uint32_t>&)> done = [&](const std::vector<uint32_t>&) {
        count = checked_add(count, (u64)1);
        return true;
    };
    FillEnum fe(sc, &cap, done);
    fe.run();
    return count;
}

} // namespace

u64 lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (lam.size() != mu.size() + nu.size()) return 0;
    if (!lam.contains(mu) || !lam.contains(nu)) return 0;
    if (mu.empty()) return lam == nu ? 1 : 0;
    if (nu.empty()) return lam == mu ? 1 : 0;

    // fill the smaller content into the larger inner shape
    const Partition& big = (mu.size() >= nu.size()) ? mu : nu;
    const Partition& small = (mu.size() >= nu.size()) ? nu : mu;

    if (small.length() == 1) return is_horizontal_strip(lam, big) ? 1 : 0; // Pieri
    if (small.first() == 1) return is_vertical_strip(lam, big) ? 1 : 0;

    TripleKey key{lam, big, small};
    if (auto v = g_lr_memo.get(key)) return *v;
    u64 c = count_fillings_of_type(lam, big, small);
    g_lr_memo.put(key, c);
    return c;
}

u64 lr_multi(const Partition& lam, const std::vector<Partition>& factors) {
    uint32_t total = 0;
    for (const auto& f : factors) total += f.size();
    if (total != lam.size()) return 0;
    std::map<Partition, u64> cur;
    cur[Partition()] = 1;
    for (const auto& f : factors) {
        std::map<Partition, u64> next;
        for (const auto& [shape, mult] : cur) {
            lr_expand(shape, f, [&](const Partition& out) {
                if (!lam.contains(out)) return;
                auto& slot = next[out];
                slot = checked_add(slot, mult);
            });
        }
        cur.swap(next);
        if (cur.empty()) return 0;
    }
    auto it = cur.find(lam);
    return it == cur.end() ? 0 : it->second;
}

u64 kostka(const Partition& gamma, const Partition& lam) {
    if (gamma.size() != lam.size())
        throw size_mismatch("kostka: |gamma| != |lambda|");
    std::vector<Partition> rows;
    for (uint32_t v : lam.parts()) rows.push_back(Partition{v});
    return lr_multi(gamma, rows);
}

u64 skew_inner(const SkewShape& a, const SkewShape& b) {
    if (a.size() != b.size()) throw size_mismatch("skew_inner: sizes differ");
    TypeHist ha = lr_type_histogram(a);
    TypeHist hb = lr_type_histogram(b);
    u64 total = 0;
    for (const auto& [nu, ca] : ha) {
        auto it = hb.find(nu);
        if (it != hb.end()) total = checked_add(total, checked_mul(ca, it->second));
    }
    return total;
}

std::set<Partition> star_product(const std::set<Partition>& A, const std::set<Partition>& B) {
    auto check_homogeneous = [](const std::set<Partition>& S, const char* name) {
        if (S.empty()) return;
        uint32_t n = S.begin()->size();
        for (const auto& p : S)
            if (p.size() != n) throw mixed_sizes(std::string("star_product: ") + name + " is not size-homogeneous");
    };
    check_homogeneous(A, "A");
    check_homogeneous(B, "B");
    std::set<Partition> out;
    for (const auto& mu : A)
        for (const auto& nu : B)
            lr_expand(mu, nu, [&](const Partition& lam) { out.insert(lam); });
    return out;
}

bool has_lr_filling_of_type(const SkewShape& shape, const Partition& nu) {
    if (shape.size() != nu.size()) throw size_mismatch("has_lr_filling_of_type: sizes differ");
    if (nu.empty()) return shape.size() == 0;
    SkewCells sc(shape.outer, shape.inner);
    auto cap = cap_from_partition(nu, sc.rows);
    bool found = false;
    std::function<bool(const std::vector<uint32_t>&)> done = [&](const std::vector<uint32_t>&) {
        found = true;
        return false; // stop at first
    };
    FillEnum fe(sc, &cap, done);
    fe.run();
    return found;
}

TypeHist lr_type_histogram(const Partition& outer, const Partition& inner) {
    SkewKey key = normalized_skew(outer, inner);
    if (auto v = g_hist_memo.get(key)) return *v;
    SkewCells sc(key.outer, key.inner);
    TypeHist hist;
    std::function<bool(const std::vector<uint32_t>&)> done = [&](const std::vector<uint32_t>& cnt) {
        std::vector<uint32_t> type;
        for (size_t v = 1; v < cnt.size(); ++v)
            if (cnt[v]) type.push_back(cnt[v]);
        auto& slot = hist[Partition::from_sorted(std::move(type))];
        slot = checked_add(slot, (u64)1);
        return true;
    };
    FillEnum fe(sc, nullptr, done);
    fe.run();
    g_hist_memo.put(key, hist);
    return hist;
}

TypeHist lr_type_histogram(const SkewShape& shape) {
    return lr_type_histogram(shape.outer, shape.inner);
}

bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner)) return false;
    for (size_t r = 1; r < outer.length(); ++r)
        if (outer[r] > inner[r - 1]) return false;
    return true;
}

bool is_vertical_strip(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner)) return false;
    for (size_t r = 0; r < outer.length(); ++r)
        if (outer[r] > inner[r] + 1) return false;
    return true;
}

namespace {

// Place ballots of value j as a horizontal strip on `shape`, rows ascending.
// prevPrefix[r] = number of (j-1)-entries in rows 0..r-1 (prefix through row r-1).
struct StripPlacer {
    std::vector<uint32_t>& shape;          // mutated in place
    const std::vector<uint32_t>& old_shape; // shape before this strip
    const std::vector<uint32_t>& prev_prefix;
    bool first_strip;
    std::vector<uint32_t> counts;          // boxes placed per row for this strip

    StripPlacer(std::vector<uint32_t>& s, const std::vector<uint32_t>& os,
                const std::vector<uint32_t>& pp, bool first)
        : shape(s), old_shape(os), prev_prefix(pp), first_strip(first) {}

    template <class Next>
    void place(size_t row, uint32_t remaining, uint32_t placed, Next&& next) {
        if (remaining == 0) {
            next(counts);
            return;
        }
        if (row >= old_shape.size() + 1 || row >= shape.size()) return;
        // capacity at this row as a horizontal strip
        uint32_t cap = (row == 0) ? remaining
                                  : (old_shape[row - 1] > old_shape[row]
                                         ? old_shape[row - 1] - old_shape[row]
                                         : 0);
        cap = std::min(cap, remaining);
        if (!first_strip) {
            uint32_t ballot = prev_prefix[row] > placed ? prev_prefix[row] - placed : 0;
            cap = std::min(cap, ballot);
        }
        // quick feasibility: everything below row r fits under old_shape[row-1]
        for (uint32_t c = cap + 1; c-- > 0;) {
            shape[row] = old_shape[row] + c;
            counts.push_back(c);
            place(row + 1, remaining - c, placed + c, next);
            counts.pop_back();
            shape[row] = old_shape[row];
            if (c == 0) break;
        }
    }
};

void lr_expand_rec(std::vector<uint32_t>& shape, const Partition& nu, size_t j,
                   std::vector<uint32_t>& prev_prefix,
                   const std::function<void(const Partition&)>& emit) {
    if (j == nu.length()) {
        std::vector<uint32_t> out;
        for (uint32_t v : shape)
            if (v) out.push_back(v);
        emit(Partition::from_sorted(std::move(out)));
        return;
    }
    std::vector<uint32_t> old_shape = shape;
    StripPlacer sp(shape, old_shape, prev_prefix, j == 0);
    sp.place(0, nu[j], 0, [&](const std::vector<uint32_t>& counts) {
        // prefix sums of this strip become the ballot bound for the next one
        std::vector<uint32_t> pp(shape.size() + 1, 0);
        uint32_t acc = 0;
        for (size_t r = 0; r < shape.size(); ++r) {
            pp[r] = acc; // prefix through rows 0..r-1
            if (r < counts.size()) acc += counts[r];
        }
        pp[shape.size()] = acc;
        // shift: pp[r] should be prefix through row r-1 for the NEXT strip's row r
        std::vector<uint32_t> shifted(shape.size() + 1, 0);
        acc = 0;
        for (size_t r = 0; r + 1 <= shape.size(); ++r) {
            if (r < counts.size()) acc += counts[r];
            shifted[r + 1] = acc;
        }
        shifted[0] = 0;
        std::swap(prev_prefix, shifted);
        lr_expand_rec(shape, nu, j + 1, prev_prefix, emit);
        std::swap(prev_prefix, shifted);
    });
}

} // namespace

void lr_expand(const Partition& mu, const Partition& nu,
               const std::function<void(const Partition&)>& emit) {
    if (nu.empty()) {
        emit(mu);
        return;
    }
    size_t max_rows = mu.length() + nu.length();
    std::vector<uint32_t> shape(max_rows, 0);
    for (size_t i = 0; i < mu.length(); ++i) shape[i] = mu[i];
    std::vector<uint32_t> prev_prefix(max_rows + 1, 0);
    lr_expand_rec(shape, nu, 0, prev_prefix, emit);
}

std::map<Partition, u64> lr_expand_map(const Partition& mu, const Partition& nu) {
    std::map<Partition, u64> out;
    lr_expand(mu, nu, [&](const Partition& lam) {
        auto& slot = out[lam];
        slot = checked_add(slot, (u64)1);
    });
    return out;
}

void for_each_hstrip_removal(const Partition& p, uint32_t size,
                             const std::function<void(const Partition&)>& f) {
    if (size > p.size()) return;
    std::vector<uint32_t> cur(p.parts());
    // choose d_r boxes removed from row r, d_r <= p_r - p_{r+1}, keeping a
    // horizontal strip p/cur
    std::function<void(size_t, uint32_t)> rec = [&](size_t row, uint32_t remaining) {
        if (remaining == 0) {
            std::vector<uint32_t> out;
            for (uint32_t v : cur)
                if (v) out.push_back(v);
            f(Partition::from_sorted(std::move(out)));
            return;
        }
        if (row >= p.length()) return;
        uint32_t room = p[row] - p[row + 1]; // p[row+1] is 0 past the end
        uint32_t hi = std::min(room, remaining);
        for (uint32_t d = 0; d <= hi; ++d) {
            cur[row] = p[row] - d;
            rec(row + 1, remaining - d);
        }
        cur[row] = p[row];
    };
    rec(0, size);
}

void clear_lr_caches() {
    g_lr_memo.clear();
    g_hist_memo.clear();
}

} // namespace plethz

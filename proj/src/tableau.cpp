#include "dfv/tableau.hpp"

#include <algorithm>
#include <set>

namespace dfv {

namespace {

void checkDistinctPositive(const std::vector<int>& all, const char* what) {
    std::set<int> seen;
    for (int e : all) {
        if (e <= 0) throw std::invalid_argument(std::string(what) + ": entries must be positive");
        if (!seen.insert(e).second)
            throw std::invalid_argument(std::string(what) + ": entries must be pairwise distinct");
    }
}

}  // namespace

TwoLineArray::TwoLineArray(std::vector<int> dom, std::vector<int> vals)
    : domain(std::move(dom)), values(std::move(vals)) {
    if (domain.size() != values.size())
        throw std::invalid_argument("TwoLineArray: domain and values must have equal length");
    for (std::size_t i = 0; i + 1 < domain.size(); ++i)
        if (domain[i] >= domain[i + 1])
            throw std::invalid_argument("TwoLineArray: domain must be strictly increasing");
    checkDistinctPositive(domain, "TwoLineArray domain");
    checkDistinctPositive(values, "TwoLineArray values");
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    std::vector<int> all;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const auto& row = rows_[i];
        if (row.empty()) throw std::invalid_argument("Tableau: empty row inside shape");
        if (i + 1 < rows_.size() && rows_[i + 1].size() > row.size())
            throw std::invalid_argument("Tableau: row lengths must be weakly decreasing");
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j + 1 < row.size() && row[j] >= row[j + 1])
                throw std::invalid_argument("Tableau: rows must increase strictly");
            if (i + 1 < rows_.size() && j < rows_[i + 1].size() && row[j] >= rows_[i + 1][j])
                throw std::invalid_argument("Tableau: columns must increase strictly");
            all.push_back(row[j]);
        }
    }
    checkDistinctPositive(all, "Tableau");
}

Tableau Tableau::column(std::vector<int> entries) {
    std::sort(entries.begin(), entries.end());
    std::vector<std::vector<int>> rows;
    rows.reserve(entries.size());
    for (int e : entries) rows.push_back({e});
    return Tableau(std::move(rows));
}

Partition Tableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
}

int Tableau::cellCount() const {
    int c = 0;
    for (const auto& r : rows_) c += static_cast<int>(r.size());
    return c;
}

std::vector<int> Tableau::entries() const {
    std::vector<int> all;
    for (const auto& r : rows_) all.insert(all.end(), r.begin(), r.end());
    std::sort(all.begin(), all.end());
    return all;
}

SkewTableau::SkewTableau(std::vector<int> inner, std::vector<std::vector<int>> rows)
    : inner_(std::move(inner)), rows_(std::move(rows)) {
    inner_.resize(rows_.size(), 0);
    std::vector<int> all;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (inner_[i] < 0) throw std::invalid_argument("SkewTableau: negative inner part");
        int outer = inner_[i] + static_cast<int>(rows_[i].size());
        if (i + 1 < rows_.size()) {
            int outerBelow = inner_[i + 1] + static_cast<int>(rows_[i + 1].size());
            if (inner_[i] < inner_[i + 1] || outer < outerBelow)
                throw std::invalid_argument("SkewTableau: shapes must be partitions");
        }
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j + 1 < rows_[i].size() && rows_[i][j] >= rows_[i][j + 1])
                throw std::invalid_argument("SkewTableau: rows must increase strictly");
            all.push_back(rows_[i][j]);
        }
    }
    // column condition between consecutive rows
    for (std::size_t i = 0; i + 1 < rows_.size(); ++i) {
        for (std::size_t j = 0; j < rows_[i + 1].size(); ++j) {
            int col = inner_[i + 1] + static_cast<int>(j);
            if (col >= inner_[i] && col < inner_[i] + static_cast<int>(rows_[i].size())) {
                if (rows_[i][static_cast<std::size_t>(col - inner_[i])] >= rows_[i + 1][j])
                    throw std::invalid_argument("SkewTableau: columns must increase strictly");
            }
        }
    }
    checkDistinctPositive(all, "SkewTableau");
}

Partition SkewTableau::outerShape() const {
    std::vector<int> parts;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        parts.push_back(inner_[i] + static_cast<int>(rows_[i].size()));
    return Partition(std::move(parts));
}

Partition SkewTableau::innerShape() const {
    std::vector<int> parts;
    for (int p : inner_)
        if (p > 0) parts.push_back(p);
    return Partition(std::move(parts));
}

int SkewTableau::cellCount() const {
    int c = 0;
    for (const auto& r : rows_) c += static_cast<int>(r.size());
    return c;
}

std::vector<int> SkewTableau::entries() const {
    std::vector<int> all;
    for (const auto& r : rows_) all.insert(all.end(), r.begin(), r.end());
    std::sort(all.begin(), all.end());
    return all;
}

bool SkewTableau::straight() const {
    for (int p : inner_)
        if (p != 0) return false;
    return true;
}

Tableau transpose_tableau(const Tableau& t) {
    const auto& rows = t.rows();
    if (rows.empty()) return Tableau();
    std::vector<std::vector<int>> cols(rows[0].size());
    for (const auto& row : rows)
        for (std::size_t j = 0; j < row.size(); ++j) cols[j].push_back(row[j]);
    return Tableau(std::move(cols));
}

namespace {

// Row-inserts value into t, records which row gained a box.
int rowInsert(std::vector<std::vector<int>>& rows, int value) {
    int x = value;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto it = std::upper_bound(rows[i].begin(), rows[i].end(), x);
        if (it == rows[i].end()) {
            rows[i].push_back(x);
            return static_cast<int>(i);
        }
        std::swap(x, *it);
    }
    rows.push_back({x});
    return static_cast<int>(rows.size()) - 1;
}

}  // namespace

std::pair<Tableau, Tableau> rs_correspondence(const TwoLineArray& arr) {
    std::vector<std::vector<int>> ins, rec;
    for (int k = 0; k < arr.size(); ++k) {
        int row = rowInsert(ins, arr.values[static_cast<std::size_t>(k)]);
        if (row == static_cast<int>(rec.size())) rec.emplace_back();
        rec[static_cast<std::size_t>(row)].push_back(arr.domain[static_cast<std::size_t>(k)]);
    }
    return {Tableau(std::move(ins)), Tableau(std::move(rec))};
}

TwoLineArray rs_inverse(const Tableau& t1, const Tableau& t2) {
    if (t1.shape() != t2.shape())
        throw std::invalid_argument("rs_inverse: tableaux must have equal shape");
    auto ins = t1.rows();
    auto rec = t2.rows();
    std::vector<int> domain, values;
    for (int step = t1.cellCount(); step > 0; --step) {
        // locate the largest recording entry; it sits at a removable corner
        std::size_t ri = 0;
        int best = -1;
        for (std::size_t i = 0; i < rec.size(); ++i)
            if (!rec[i].empty() && rec[i].back() > best) {
                best = rec[i].back();
                ri = i;
            }
        rec[ri].pop_back();
        int x = ins[ri].back();
        ins[ri].pop_back();
        for (std::size_t i = ri; i-- > 0;) {
            auto it = std::lower_bound(ins[i].begin(), ins[i].end(), x);
            --it;  // largest entry < x; exists by column strictness
            std::swap(x, *it);
        }
        domain.push_back(best);
        values.push_back(x);
    }
    std::reverse(domain.begin(), domain.end());
    std::reverse(values.begin(), values.end());
    return TwoLineArray(std::move(domain), std::move(values));
}

SkewTableau star_concat(const std::vector<Tableau>& pieces) {
    std::set<int> seen;
    for (const auto& p : pieces)
        for (int e : p.entries())
            if (!seen.insert(e).second)
                throw std::invalid_argument("star_concat: entry sets must be pairwise disjoint");

    std::vector<int> inner;
    std::vector<std::vector<int>> rows;
    // later pieces sit higher; row blocks are emitted from the last piece down
    std::vector<int> shift(pieces.size(), 0);
    for (std::size_t i = 1; i < pieces.size(); ++i)
        shift[i] = shift[i - 1] + pieces[i - 1].width();
    for (std::size_t i = pieces.size(); i-- > 0;) {
        for (const auto& row : pieces[i].rows()) {
            inner.push_back(shift[i]);
            rows.push_back(row);
        }
    }
    return SkewTableau(std::move(inner), std::move(rows));
}

namespace {

struct SlideGrid {
    std::vector<int> inner;                 // remaining inner shape per row
    std::vector<std::vector<int>> cells;    // cells[i][j] entry at column inner0[i]+j... stored absolute
    std::vector<int> outer;

    // absolute-position accessors; grid[r][c] with c in [inner[r], outer[r])
    std::vector<std::vector<int>> grid;

    bool filled(int r, int c) const {
        return r >= 0 && r < static_cast<int>(grid.size()) && c >= inner[static_cast<std::size_t>(r)] &&
               c < outer[static_cast<std::size_t>(r)];
    }
    int& at(int r, int c) { return grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
};

}  // namespace

Tableau jdt_rectify(const SkewTableau& s, const std::function<int(int)>& chooseCorner) {
    SlideGrid g;
    auto outerParts = s.outerShape().parts();
    g.inner = s.inner();
    g.outer.assign(g.inner.size(), 0);
    g.grid.assign(g.inner.size(), {});
    for (std::size_t i = 0; i < s.rows().size(); ++i) {
        g.outer[i] = g.inner[i] + static_cast<int>(s.rows()[i].size());
        g.grid[i].assign(static_cast<std::size_t>(g.outer[i]), 0);
        for (std::size_t j = 0; j < s.rows()[i].size(); ++j)
            g.grid[i][static_cast<std::size_t>(g.inner[i]) + j] = s.rows()[i][j];
    }
    (void)outerParts;

    auto removableCorners = [&]() {
        std::vector<int> rows;
        for (std::size_t i = 0; i < g.inner.size(); ++i) {
            if (g.inner[i] == 0) continue;
            int below = (i + 1 < g.inner.size()) ? g.inner[i + 1] : 0;
            if (g.inner[i] > below) rows.push_back(static_cast<int>(i));
        }
        return rows;
    };

    for (auto corners = removableCorners(); !corners.empty(); corners = removableCorners()) {
        int pick = chooseCorner(static_cast<int>(corners.size()));
        int r = corners[static_cast<std::size_t>(pick)];
        int c = g.inner[static_cast<std::size_t>(r)] - 1;
        g.inner[static_cast<std::size_t>(r)] = c;
        // slide the hole outward
        while (true) {
            bool hasRight = g.filled(r, c + 1);
            bool hasBelow = g.filled(r + 1, c);
            if (!hasRight && !hasBelow) {
                g.outer[static_cast<std::size_t>(r)] = c;  // hole exits at the row end
                break;
            }
            bool moveBelow;
            if (!hasRight)
                moveBelow = true;
            else if (!hasBelow)
                moveBelow = false;
            else
                moveBelow = g.at(r + 1, c) < g.at(r, c + 1);
            if (moveBelow) {
                g.at(r, c) = g.at(r + 1, c);
                ++r;
            } else {
                g.at(r, c) = g.at(r, c + 1);
                ++c;
            }
        }
    }

    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < g.grid.size(); ++i) {
        if (g.outer[i] == 0) continue;
        rows.emplace_back(g.grid[i].begin(), g.grid[i].begin() + g.outer[i]);
    }
    return Tableau(std::move(rows));
}

Tableau jdt_rectify(const SkewTableau& s) {
    return jdt_rectify(s, [](int) { return 0; });
}

}  // namespace dfv

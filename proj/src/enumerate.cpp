#include "quandle/finite_quandle.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <set>

namespace quandle {

namespace {

// Backtracking over right translations. Column y is a permutation fixing y;
// distributivity says S_z S_y S_z^-1 = S_{S_z(y)} (functions composed right
// to left), so once S_y and S_z are known the column S_{y*z} is forced.
class ColumnSearch {
public:
    explicit ColumnSearch(int n) :
        n_(n)
    {
        Permutation p = identity_permutation(n);
        do
            all_perms_.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }

    std::vector<Permutation> candidates(int y) const
    {
        std::vector<Permutation> out;
        for (const auto& p : all_perms_)
            if (p[y] == y)
                out.push_back(p);
        return out;
    }

    // Fixes column `first` to `choice` and collects every completed table.
    void run(int first, const Permutation& choice, std::vector<std::vector<int>>& out)
    {
        std::vector<std::optional<Permutation>> columns(static_cast<std::size_t>(n_));
        columns[first] = choice;
        if (propagate(columns))
            descend(columns, out);
    }

private:
    bool propagate(std::vector<std::optional<Permutation>>& columns) const
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int z = 0; z < n_; ++z) {
                if (!columns[z])
                    continue;
                const Permutation& sz = *columns[z];
                for (int y = 0; y < n_; ++y) {
                    if (!columns[y])
                        continue;
                    const Permutation& sy = *columns[y];
                    const int w = sz[y];
                    // required S_w: sz(x) -> sz(sy(x))
                    Permutation required(static_cast<std::size_t>(n_));
                    for (int x = 0; x < n_; ++x)
                        required[sz[x]] = sz[sy[x]];
                    if (columns[w]) {
                        if (*columns[w] != required)
                            return false;
                    } else {
                        columns[w] = std::move(required);
                        changed = true;
                    }
                }
            }
        }
        return true;
    }

    void descend(std::vector<std::optional<Permutation>>& columns, std::vector<std::vector<int>>& out) const
    {
        int next = -1;
        for (int y = 0; y < n_; ++y)
            if (!columns[y]) {
                next = y;
                break;
            }
        if (next < 0) {
            std::vector<int> flat(static_cast<std::size_t>(n_) * n_);
            for (int x = 0; x < n_; ++x)
                for (int y = 0; y < n_; ++y)
                    flat[static_cast<std::size_t>(x) * n_ + y] = (*columns[y])[x];
            out.push_back(std::move(flat));
            return;
        }
        for (const auto& p : all_perms_) {
            if (p[next] != next)
                continue;
            auto trial = columns;
            trial[next] = p;
            if (propagate(trial))
                descend(trial, out);
        }
    }

    int n_;
    std::vector<Permutation> all_perms_;
};

Table unflatten(const std::vector<int>& flat, int n)
{
    Table t(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        t[x].assign(flat.begin() + static_cast<std::ptrdiff_t>(x) * n, flat.begin() + static_cast<std::ptrdiff_t>(x + 1) * n);
    return t;
}

std::vector<std::vector<int>> labeled_tables(int n, int jobs)
{
    ColumnSearch search(n);
    const auto firsts = search.candidates(0);
    std::vector<std::vector<std::vector<int>>> chunks(firsts.size());

    if (jobs <= 1) {
        for (std::size_t i = 0; i < firsts.size(); ++i)
            search.run(0, firsts[i], chunks[i]);
    } else {
        std::size_t next = 0;
        while (next < firsts.size()) {
            std::vector<std::future<void>> batch;
            for (int j = 0; j < jobs && next < firsts.size(); ++j, ++next)
                batch.push_back(std::async(std::launch::async, [&search, &firsts, &chunks, i = next] {
                    ColumnSearch local = search;
                    local.run(0, firsts[i], chunks[i]);
                }));
            for (auto& f : batch)
                f.get();
        }
    }

    std::vector<std::vector<int>> out;
    for (auto& chunk : chunks)
        for (auto& t : chunk)
            out.push_back(std::move(t));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<FiniteQuandle> enumerate_quandles(int n, bool up_to_iso, const EnumerateOptions& options)
{
    if (n < 1)
        throw InvalidTable("quandle order must be positive");
    if (n > options.bound)
        throw BoundExceeded(n, options.bound);

    const auto tables = labeled_tables(n, options.jobs);
    std::vector<FiniteQuandle> out;
    if (!up_to_iso) {
        out.reserve(tables.size());
        for (const auto& t : tables)
            out.push_back(FiniteQuandle::validate(unflatten(t, n)));
        return out;
    }

    // each new table's full relabeling orbit is marked at once; the orbit
    // minimum is the class's canonical table
    std::set<std::vector<int>> seen;
    std::set<std::vector<int>> classes;
    Permutation old_of = identity_permutation(n);
    for (const auto& t : tables) {
        if (seen.contains(t))
            continue;
        std::vector<int> least = t;
        std::sort(old_of.begin(), old_of.end());
        Permutation relabel(static_cast<std::size_t>(n));
        do {
            for (int i = 0; i < n; ++i)
                relabel[old_of[i]] = i;
            std::vector<int> image(t.size());
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    image[static_cast<std::size_t>(x) * n + y] =
                        relabel[t[static_cast<std::size_t>(old_of[x]) * n + old_of[y]]];
            least = std::min(least, image);
            seen.insert(std::move(image));
        } while (std::next_permutation(old_of.begin(), old_of.end()));
        classes.insert(std::move(least));
    }
    int index = 1;
    for (const auto& t : classes)
        out.push_back(FiniteQuandle::validate(unflatten(t, n), "Q" + std::to_string(n) + "_" + std::to_string(index++)));
    return out;
}

std::vector<FiniteQuandle> quandle_catalog(int max_order, const EnumerateOptions& options)
{
    std::vector<FiniteQuandle> out;
    for (int n = 1; n <= max_order; ++n) {
        auto level = enumerate_quandles(n, true, options);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

} // namespace quandle

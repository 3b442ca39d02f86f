#include "schubert/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace schubert {

namespace {

std::string key_of(std::span<const int> coords)
{
    std::string key(coords.size(), '\0');
    for (std::size_t i = 0; i < coords.size(); ++i)
        key[i] = static_cast<char>(static_cast<signed char>(coords[i]));
    return key;
}

void require_rank(bool ok, Series s, int rank)
{
    if (!ok)
        throw InvalidCartan(std::string("no simple type ") + series_letter(s) + std::to_string(rank));
}

std::size_t positive_root_bound(Series s, int n)
{
    switch (s) {
    case Series::A: return static_cast<std::size_t>(n) * (n + 1) / 2;
    case Series::B:
    case Series::C: return static_cast<std::size_t>(n) * n;
    case Series::D: return static_cast<std::size_t>(n) * (n - 1);
    case Series::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Series::F: return 24;
    case Series::G: return 6;
    }
    return 0;
}

} // namespace

Series parse_series(const std::string& text)
{
    if (text.size() == 1) {
        switch (text[0]) {
        case 'A': case 'a': return Series::A;
        case 'B': case 'b': return Series::B;
        case 'C': case 'c': return Series::C;
        case 'D': case 'd': return Series::D;
        case 'E': case 'e': return Series::E;
        case 'F': case 'f': return Series::F;
        case 'G': case 'g': return Series::G;
        default: break;
        }
    }
    throw InvalidCartan("unknown Cartan series '" + text + "' (expected one of A,B,C,D,E,F,G)");
}

char series_letter(Series s) { return static_cast<char>(s); }

// ---------------------------------------------------------------------------
// Cartan data

std::vector<int> validate_cartan_matrix(const IntMatrix& a)
{
    const int n = a.size();
    if (n < 1)
        throw InvalidCartan("Cartan matrix must have rank >= 1");
    for (int i = 0; i < n; ++i) {
        if (a(i, i) != 2)
            throw InvalidCartan("Cartan matrix diagonal entries must be 2");
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            if (a(i, j) > 0)
                throw InvalidCartan("Cartan matrix off-diagonal entries must be <= 0");
            if ((a(i, j) == 0) != (a(j, i) == 0))
                throw InvalidCartan("Cartan matrix zero pattern must be symmetric");
        }
    }

    // Symmetriser d_i = (alpha_i, alpha_i), propagated along the Dynkin graph
    // as fractions num/den: a(i,j) d_i = a(j,i) d_j.
    std::vector<long long> num(n, 0), den(n, 1);
    num[0] = 1;
    std::vector<bool> seen(n, false);
    seen[0] = true;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        for (int j = 0; j < n; ++j) {
            if (j == i || a(i, j) == 0)
                continue;
            long long nj = num[i] * a(i, j);
            long long dj = den[i] * a(j, i);
            if (dj < 0) {
                nj = -nj;
                dj = -dj;
            }
            long long g = std::gcd(nj, dj);
            nj /= g;
            dj /= g;
            if (!seen[j]) {
                seen[j] = true;
                num[j] = nj;
                den[j] = dj;
                queue.push_back(j);
            } else if (num[j] * dj != nj * den[j]) {
                throw InvalidCartan("Cartan matrix is not symmetrisable");
            }
        }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw InvalidCartan("Dynkin diagram is disconnected; only simple types are supported");

    long long l = 1;
    for (int i = 0; i < n; ++i)
        l = std::lcm(l, den[i]);
    std::vector<long long> d(n);
    for (int i = 0; i < n; ++i)
        d[i] = num[i] * (l / den[i]);
    long long g = 0;
    for (auto x : d)
        g = std::gcd(g, x);
    for (auto& x : d)
        x = 2 * x / g;

    // Positive definiteness of (alpha_i, alpha_j) = a(i,j) d_i / 2 via exact
    // fraction-free elimination (Bareiss); leading principal minors are the pivots.
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = a(i, j) * d[i] / 2;
    long long prev = 1;
    for (int k = 0; k < n; ++k) {
        if (m[k][k] <= 0)
            throw InvalidCartan("Cartan matrix is not of finite type (symmetrisation not positive definite)");
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }

    std::vector<int> norms(n);
    for (int i = 0; i < n; ++i)
        norms[i] = static_cast<int>(d[i]);
    return norms;
}

CartanDatum CartanDatum::canonical(Series s, int n)
{
    IntMatrix m(n > 0 ? n : 0);
    auto link = [&](int i, int j, int ij, int ji) {
        m(i, j) = ij;
        m(j, i) = ji;
    };
    switch (s) {
    case Series::A:
        require_rank(n >= 1, s, n);
        for (int i = 0; i + 1 < n; ++i)
            link(i, i + 1, -1, -1);
        break;
    case Series::B:
        require_rank(n >= 2, s, n);
        for (int i = 0; i + 2 < n; ++i)
            link(i, i + 1, -1, -1);
        link(n - 2, n - 1, -1, -2);
        break;
    case Series::C:
        require_rank(n >= 2, s, n);
        for (int i = 0; i + 2 < n; ++i)
            link(i, i + 1, -1, -1);
        link(n - 2, n - 1, -2, -1);
        break;
    case Series::D:
        require_rank(n >= 4, s, n);
        for (int i = 0; i + 2 < n; ++i)
            link(i, i + 1, -1, -1);
        link(n - 3, n - 1, -1, -1);
        break;
    case Series::E:
        require_rank(n >= 6 && n <= 8, s, n);
        link(0, 2, -1, -1);
        link(1, 3, -1, -1);
        for (int i = 2; i + 1 < n; ++i)
            link(i, i + 1, -1, -1);
        break;
    case Series::F:
        require_rank(n == 4, s, n);
        link(0, 1, -1, -1);
        link(1, 2, -1, -2);
        link(2, 3, -1, -1);
        break;
    case Series::G:
        require_rank(n == 2, s, n);
        link(0, 1, -3, -1);
        break;
    }
    for (int i = 0; i < n; ++i)
        m(i, i) = 2;
    auto norms = validate_cartan_matrix(m);
    return CartanDatum(s, n, std::move(m), std::move(norms));
}

CartanDatum CartanDatum::from_matrix(Series s, int rank, const IntMatrix& matrix)
{
    if (matrix.size() != rank)
        throw InvalidCartan("Cartan matrix size does not match rank");
    auto norms = validate_cartan_matrix(matrix);
    CartanDatum expected = canonical(s, rank);
    if (!(expected.matrix() == matrix))
        throw InvalidCartan("Cartan matrix does not match the canonical matrix for " + expected.name());
    return CartanDatum(s, rank, matrix, std::move(norms));
}

std::string CartanDatum::name() const { return std::string(1, series_letter(series_)) + std::to_string(rank_); }

// ---------------------------------------------------------------------------
// Roots

bool RootVector::is_zero() const
{
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

bool RootVector::is_positive() const
{
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; }) && !is_zero();
}

bool RootVector::is_negative() const
{
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c <= 0; }) && !is_zero();
}

int RootVector::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

RootVector RootVector::operator-() const
{
    RootVector r = *this;
    for (auto& c : r.coords)
        c = -c;
    return r;
}

RootVector simple_root(int rank, int i)
{
    RootVector r{std::vector<int>(rank, 0)};
    r.coords.at(i) = 1;
    return r;
}

std::vector<RootVector> build_positive_roots(const CartanDatum& datum)
{
    const int n = datum.rank();
    const std::size_t bound = positive_root_bound(datum.series(), n);
    std::vector<RootVector> roots;
    std::unordered_map<std::string, bool> seen;
    std::deque<RootVector> queue;
    for (int i = 0; i < n; ++i) {
        auto r = simple_root(n, i);
        seen[key_of(r.coords)] = true;
        roots.push_back(r);
        queue.push_back(r);
    }
    while (!queue.empty()) {
        RootVector beta = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            int p = 0;
            for (int j = 0; j < n; ++j)
                p += datum(i, j) * beta.coords[j];
            RootVector gamma = beta;
            gamma.coords[i] -= p;
            if (!gamma.is_positive())
                continue;
            auto k = key_of(gamma.coords);
            if (seen.count(k))
                continue;
            seen[k] = true;
            roots.push_back(gamma);
            queue.push_back(gamma);
            if (roots.size() > bound)
                throw NotFiniteType("root closure for " + datum.name() + " exceeded " + std::to_string(bound) +
                                    " positive roots");
        }
    }
    std::sort(roots.begin(), roots.end(), [](const RootVector& a, const RootVector& b) {
        if (a.height() != b.height())
            return a.height() < b.height();
        return a.coords > b.coords;
    });
    return roots;
}

RootSystem::RootSystem(CartanDatum datum) : datum_(std::move(datum)), positive_(build_positive_roots(datum_))
{
    const int n = rank();
    const auto& d = datum_.root_norms();
    for (std::size_t p = 0; p < positive_.size(); ++p) {
        const auto& c = positive_[p].coords;
        index_[key_of(c)] = p;
        // (beta, beta) = sum_ij c_i c_j a(i,j) d_i / 2
        long long norm2 = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                norm2 += static_cast<long long>(c[i]) * c[j] * datum_(i, j) * d[i];
        norm2 /= 2;
        // beta^vee = 2 beta / (beta,beta) and alpha_i = (d_i / 2) alpha_i^vee, so the
        // coefficient of alpha_i^vee is c_i d_i / (beta,beta).
        std::vector<int> cor(n);
        for (int i = 0; i < n; ++i)
            cor[i] = static_cast<int>(static_cast<long long>(c[i]) * d[i] / norm2);
        coroots_.push_back(std::move(cor));
    }
}

std::optional<std::size_t> RootSystem::positive_index(const RootVector& beta) const
{
    if (static_cast<int>(beta.coords.size()) != rank())
        return std::nullopt;
    auto it = index_.find(key_of(beta.coords));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

bool RootSystem::is_root(const RootVector& beta) const
{
    return positive_index(beta).has_value() || positive_index(-beta).has_value();
}

std::vector<int> RootSystem::coroot(const RootVector& beta) const
{
    if (auto p = positive_index(beta))
        return coroots_[*p];
    if (auto p = positive_index(-beta)) {
        auto c = coroots_[*p];
        for (auto& x : c)
            x = -x;
        return c;
    }
    throw NotARoot("vector is not a root of " + datum_.name());
}

int RootSystem::pair_simple_coroot(const RootVector& v, int i) const
{
    int p = 0;
    for (int j = 0; j < rank(); ++j)
        p += datum_(i, j) * v.coords[j];
    return p;
}

RootVector RootSystem::reflect(int i, const RootVector& v) const
{
    RootVector r = v;
    r.coords[i] -= pair_simple_coroot(v, i);
    return r;
}

Weight RootSystem::to_weight(const RootVector& v) const
{
    Weight w{std::vector<int>(rank())};
    for (int i = 0; i < rank(); ++i)
        w.labels[i] = pair_simple_coroot(v, i);
    return w;
}

Weight RootSystem::fundamental_weight(int i) const
{
    Weight w{std::vector<int>(rank(), 0)};
    w.labels.at(i) = 1;
    return w;
}

int RootSystem::pair(const Weight& lambda, const RootVector& beta) const
{
    auto cor = coroot(beta);
    int p = 0;
    for (int i = 0; i < rank(); ++i)
        p += lambda.labels[i] * cor[i];
    return p;
}

// ---------------------------------------------------------------------------
// Weyl group

int WeylElement::length() const { return group_->length(index_); }
std::span<const std::uint8_t> WeylElement::word() const { return group_->word(index_); }
std::vector<RootVector> WeylElement::action() const { return group_->action(*this); }

std::shared_ptr<const WeylGroup> WeylGroup::create(const CartanDatum& datum, std::size_t capacity)
{
    return std::shared_ptr<const WeylGroup>(new WeylGroup(datum, capacity));
}

WeylGroup::WeylGroup(const CartanDatum& datum, std::size_t capacity) : roots_(datum)
{
    const int n = rank();
    const std::size_t nn = static_cast<std::size_t>(n) * n;

    // Action matrices: column j holds w(alpha_j).
    auto right_act = [&](const std::vector<int>& w, int i) {
        std::vector<int> r(w);
        for (int j = 0; j < n; ++j) {
            int a = datum(i, j);
            if (a == 0)
                continue;
            for (int k = 0; k < n; ++k)
                r[j * n + k] -= a * w[i * n + k];
        }
        return r;
    };
    auto left_act = [&](const std::vector<int>& w, int i) {
        std::vector<int> r(w);
        for (int j = 0; j < n; ++j) {
            int p = 0;
            for (int k = 0; k < n; ++k)
                p += datum(i, k) * w[j * n + k];
            r[j * n + i] -= p;
        }
        return r;
    };
    auto column_positive = [&](const std::vector<int>& w, int j) {
        for (int k = 0; k < n; ++k)
            if (w[j * n + k] != 0)
                return w[j * n + k] > 0;
        return false;
    };

    // Breadth-first enumeration by length.
    std::vector<std::vector<int>> acts;
    std::vector<int> lens;
    std::unordered_map<std::string, std::uint32_t> tmp_lookup;
    std::vector<int> id(nn, 0);
    for (int j = 0; j < n; ++j)
        id[j * n + j] = 1;
    acts.push_back(id);
    lens.push_back(0);
    tmp_lookup[key_of(id)] = 0;
    for (std::size_t t = 0; t < acts.size(); ++t) {
        for (int i = 0; i < n; ++i) {
            if (!column_positive(acts[t], i))
                continue;
            auto next = right_act(acts[t], i);
            auto k = key_of(next);
            if (tmp_lookup.count(k))
                continue;
            if (acts.size() >= capacity)
                throw CapacityExceeded("Weyl group of " + datum.name() + " exceeds the capacity of " +
                                       std::to_string(capacity) + " elements");
            tmp_lookup[k] = static_cast<std::uint32_t>(acts.size());
            acts.push_back(std::move(next));
            lens.push_back(lens[t] + 1);
        }
    }
    const std::size_t order = acts.size();

    std::vector<std::uint32_t> tmp_left(order * n);
    for (std::size_t t = 0; t < order; ++t)
        for (int i = 0; i < n; ++i)
            tmp_left[t * n + i] = tmp_lookup.at(key_of(left_act(acts[t], i)));

    // Canonical words: peel off the smallest left descent.
    std::vector<std::vector<std::uint8_t>> tmp_words(order);
    for (std::size_t t = 1; t < order; ++t) {
        for (int i = 0; i < n; ++i) {
            std::uint32_t s = tmp_left[t * n + i];
            if (lens[s] < lens[t]) {
                tmp_words[t].push_back(static_cast<std::uint8_t>(i));
                const auto& rest = tmp_words[s];
                tmp_words[t].insert(tmp_words[t].end(), rest.begin(), rest.end());
                break;
            }
        }
    }

    std::vector<std::uint32_t> perm(order);
    std::iota(perm.begin(), perm.end(), 0u);
    std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (lens[a] != lens[b])
            return lens[a] < lens[b];
        return tmp_words[a] < tmp_words[b];
    });
    std::vector<std::uint32_t> rank_of(order);
    for (std::size_t k = 0; k < order; ++k)
        rank_of[perm[k]] = static_cast<std::uint32_t>(k);

    lengths_.resize(order);
    words_.resize(order);
    actions_.resize(order);
    for (std::size_t k = 0; k < order; ++k) {
        lengths_[k] = lens[perm[k]];
        words_[k] = std::move(tmp_words[perm[k]]);
        actions_[k] = std::move(acts[perm[k]]);
        lookup_[key_of(actions_[k])] = static_cast<std::uint32_t>(k);
    }
    right_.resize(order * n);
    left_.resize(order * n);
    for (std::size_t k = 0; k < order; ++k) {
        for (int i = 0; i < n; ++i) {
            left_[k * n + i] = rank_of[tmp_left[perm[k] * n + i]];
            right_[k * n + i] = lookup_.at(key_of(right_act(actions_[k], i)));
        }
    }

    inverse_.assign(order, 0);
    for (std::size_t k = 1; k < order; ++k) {
        int i = words_[k][0];
        std::uint32_t rest = left_[k * n + i];
        inverse_[k] = right_[inverse_[rest] * n + i];
    }

    const auto& pos = roots_.positive_roots();
    for (const auto& beta : pos) {
        std::vector<RootVector> images;
        for (int j = 0; j < n; ++j) {
            RootVector img = simple_root(n, j);
            int p = roots_.pair(roots_.to_weight(img), beta);
            for (int k = 0; k < n; ++k)
                img.coords[k] -= p * beta.coords[k];
            images.push_back(std::move(img));
        }
        reflections_.push_back(find(images));
    }

    times_reflection_.resize(order * pos.size());
    for (std::size_t k = 0; k < order; ++k)
        for (std::size_t p = 0; p < pos.size(); ++p) {
            std::uint32_t r = static_cast<std::uint32_t>(k);
            for (auto i : words_[reflections_[p]])
                r = right_[r * n + i];
            times_reflection_[k * pos.size() + p] = r;
        }
}

std::uint32_t WeylGroup::find(const std::vector<RootVector>& images) const
{
    auto w = from_action(images);
    if (!w)
        throw InternalInvariantError("action does not belong to the Weyl group of " + name());
    return w->index();
}

WeylElement WeylGroup::element(std::size_t index) const
{
    if (index >= order())
        throw std::out_of_range("Weyl element index out of range");
    return WeylElement(this, static_cast<std::uint32_t>(index));
}

WeylElement WeylGroup::simple_reflection(int i) const
{
    if (i < 0 || i >= rank())
        throw std::out_of_range("simple reflection index out of range");
    return WeylElement(this, right_[i]);
}

std::vector<WeylElement> WeylGroup::elements() const
{
    std::vector<WeylElement> out;
    out.reserve(order());
    for (std::size_t k = 0; k < order(); ++k)
        out.push_back(WeylElement(this, static_cast<std::uint32_t>(k)));
    return out;
}

WeylElement WeylGroup::from_word(std::span<const int> word) const
{
    std::uint32_t r = 0;
    for (int i : word) {
        if (i < 0 || i >= rank())
            throw ParseError("simple reflection s" + std::to_string(i + 1) + " does not exist in " + name());
        r = right_[r * rank() + i];
    }
    return WeylElement(this, r);
}

std::optional<WeylElement> WeylGroup::from_action(const std::vector<RootVector>& images) const
{
    const int n = rank();
    if (static_cast<int>(images.size()) != n)
        return std::nullopt;
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& img : images) {
        if (static_cast<int>(img.coords.size()) != n)
            return std::nullopt;
        flat.insert(flat.end(), img.coords.begin(), img.coords.end());
    }
    auto it = lookup_.find(key_of(flat));
    if (it == lookup_.end())
        return std::nullopt;
    return WeylElement(this, it->second);
}

std::vector<RootVector> WeylGroup::action(const WeylElement& w) const
{
    check_same_group(w);
    const int n = rank();
    const auto& a = actions_[w.index()];
    std::vector<RootVector> out;
    for (int j = 0; j < n; ++j)
        out.push_back(RootVector{std::vector<int>(a.begin() + j * n, a.begin() + (j + 1) * n)});
    return out;
}

void WeylGroup::check_same_group(const WeylElement& x) const
{
    if (x.group_ptr() != this)
        throw GroupMismatch("Weyl element belongs to a different group than " + name());
}

WeylElement WeylGroup::multiply(const WeylElement& x, const WeylElement& y) const
{
    check_same_group(x);
    check_same_group(y);
    std::uint32_t r = x.index();
    for (auto i : words_[y.index()])
        r = right_[r * rank() + i];
    return WeylElement(this, r);
}

WeylElement WeylGroup::inverse(const WeylElement& x) const
{
    check_same_group(x);
    return WeylElement(this, inverse_[x.index()]);
}

WeylElement WeylGroup::right_multiply_simple(const WeylElement& w, int i) const
{
    return WeylElement(this, right_[w.index() * rank() + i]);
}

WeylElement WeylGroup::left_multiply_simple(int i, const WeylElement& w) const
{
    return WeylElement(this, left_[w.index() * rank() + i]);
}

bool WeylGroup::has_right_descent(const WeylElement& w, int i) const
{
    return lengths_[right_[w.index() * rank() + i]] < lengths_[w.index()];
}

bool WeylGroup::has_left_descent(const WeylElement& w, int i) const
{
    return lengths_[left_[w.index() * rank() + i]] < lengths_[w.index()];
}

RootVector WeylGroup::apply(const WeylElement& w, const RootVector& v) const
{
    check_same_group(w);
    const int n = rank();
    const auto& a = actions_[w.index()];
    RootVector out{std::vector<int>(n, 0)};
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            out.coords[k] += v.coords[j] * a[j * n + k];
    return out;
}

std::vector<RootVector> WeylGroup::inversion_set(const WeylElement& w) const
{
    std::vector<RootVector> out;
    for (const auto& beta : roots_.positive_roots())
        if (apply(w, beta).is_negative())
            out.push_back(beta);
    return out;
}

WeylElement WeylGroup::reflection(std::size_t p) const { return WeylElement(this, reflections_.at(p)); }

WeylElement WeylGroup::times_reflection(const WeylElement& w, std::size_t p) const
{
    return WeylElement(this, times_reflection_[w.index() * roots_.num_positive() + p]);
}

bool WeylGroup::bruhat_leq(const WeylElement& v0, const WeylElement& w0) const
{
    check_same_group(v0);
    check_same_group(w0);
    const int n = rank();
    std::uint32_t v = v0.index();
    std::uint32_t w = w0.index();
    while (true) {
        if (v == 0)
            return true;
        if (lengths_[v] > lengths_[w])
            return false;
        if (lengths_[v] == lengths_[w])
            return v == w;
        int i = words_[w][0]; // smallest left descent of w
        std::uint32_t sv = left_[v * n + i];
        if (lengths_[sv] < lengths_[v])
            v = sv;
        w = left_[w * n + i];
    }
}

std::vector<std::uint8_t> WeylGroup::canonical_word_from_action(const std::vector<RootVector>& images) const
{
    const int n = rank();
    auto inversions = [&](const std::vector<RootVector>& act) {
        int count = 0;
        for (const auto& beta : roots_.positive_roots()) {
            RootVector img{std::vector<int>(n, 0)};
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    img.coords[k] += beta.coords[j] * act[j].coords[k];
            if (img.is_negative())
                ++count;
        }
        return count;
    };
    std::vector<RootVector> cur = images;
    std::vector<std::uint8_t> word;
    int len = inversions(cur);
    while (len > 0) {
        bool found = false;
        for (int i = 0; i < n && !found; ++i) {
            std::vector<RootVector> next;
            for (const auto& img : cur)
                next.push_back(roots_.reflect(i, img));
            int l = inversions(next);
            if (l < len) {
                word.push_back(static_cast<std::uint8_t>(i));
                cur = std::move(next);
                len = l;
                found = true;
            }
        }
        if (!found)
            throw InternalInvariantError("no left descent found while canonicalising");
    }
    return word;
}

std::size_t classical_weyl_order(Series s, int n)
{
    auto fact = [](int k) {
        std::size_t f = 1;
        for (int i = 2; i <= k; ++i)
            f *= static_cast<std::size_t>(i);
        return f;
    };
    switch (s) {
    case Series::A: return fact(n + 1);
    case Series::B:
    case Series::C: return (std::size_t{1} << n) * fact(n);
    case Series::D: return (std::size_t{1} << (n - 1)) * fact(n);
    case Series::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case Series::F: return 1152;
    case Series::G: return 12;
    }
    return 0;
}

std::vector<int> weyl_degrees(Series s, int n)
{
    std::vector<int> d;
    switch (s) {
    case Series::A:
        for (int i = 2; i <= n + 1; ++i)
            d.push_back(i);
        break;
    case Series::B:
    case Series::C:
        for (int i = 1; i <= n; ++i)
            d.push_back(2 * i);
        break;
    case Series::D:
        for (int i = 1; i < n; ++i)
            d.push_back(2 * i);
        d.push_back(n);
        break;
    case Series::E:
        if (n == 6)
            d = {2, 5, 6, 8, 9, 12};
        else if (n == 7)
            d = {2, 6, 8, 10, 12, 14, 18};
        else
            d = {2, 8, 12, 14, 18, 20, 24, 30};
        break;
    case Series::F: d = {2, 6, 8, 12}; break;
    case Series::G: d = {2, 6}; break;
    }
    return d;
}

} // namespace schubert

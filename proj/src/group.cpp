#include "bredon/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_set>

#include "bredon/error.hpp"

namespace bredon {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)])
            throw Error(ErrorKind::Parse, "image list is not a permutation");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int degree)
{
    std::vector<int> im(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i)
        im[static_cast<std::size_t>(i)] = i;
    return Permutation(std::move(im));
}

Permutation Permutation::parse_cycles(const std::string& text, int degree)
{
    Permutation result = identity(degree);
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
    };
    skip_space();
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw Error(ErrorKind::Parse, "expected '(' in cycle notation: " + text);
        ++pos;
        std::vector<int> cycle;
        for (;;) {
            skip_space();
            if (pos >= text.size())
                throw Error(ErrorKind::Parse, "unterminated cycle: " + text);
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            if (text[pos] == ',') {
                ++pos;
                continue;
            }
            std::size_t end = pos;
            while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end])))
                ++end;
            if (end == pos)
                throw Error(ErrorKind::Parse, "bad character in cycle notation: " + text);
            int point = std::stoi(text.substr(pos, end - pos));
            if (point < 1 || point > degree)
                throw Error(ErrorKind::Parse, "point " + std::to_string(point) + " outside degree " +
                                                  std::to_string(degree));
            cycle.push_back(point - 1);
            pos = end;
        }
        std::vector<int> im = identity(degree).images();
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (std::count(cycle.begin(), cycle.end(), cycle[i]) > 1)
                throw Error(ErrorKind::Parse, "repeated point in cycle: " + text);
            im[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
        }
        result = result * Permutation(std::move(im));
        skip_space();
    }
    return result;
}

Permutation Permutation::inverse() const
{
    std::vector<int> im(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        im[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const
{
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i))
            return false;
    return true;
}

std::string Permutation::to_cycles() const
{
    std::ostringstream os;
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i] || images_[i] == static_cast<int>(i))
            continue;
        os << '(';
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = 1;
            os << (first ? "" : " ") << j + 1;
            first = false;
            j = static_cast<std::size_t>(images_[j]);
        }
        os << ')';
    }
    std::string s = os.str();
    return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& a, const Permutation& b)
{
    if (a.degree() != b.degree())
        throw Error(ErrorKind::InvalidArgument, "permutation degrees differ");
    std::vector<int> im(a.images_.size());
    for (std::size_t i = 0; i < im.size(); ++i)
        im[i] = b(a(static_cast<int>(i)));
    return Permutation(std::move(im));
}

GroupPtr FiniteGroup::from_generators(int degree, std::vector<Permutation> generators, std::string name)
{
    if (degree < 1)
        throw Error(ErrorKind::Parse, "group degree must be positive");
    for (const auto& g : generators)
        if (g.degree() != degree)
            throw Error(ErrorKind::Parse, "generator degree mismatch");

    std::map<std::vector<int>, int> seen;
    std::vector<Permutation> elems{Permutation::identity(degree)};
    seen.emplace(elems[0].images(), 0);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& s : generators) {
            Permutation p = elems[i] * s;
            if (seen.emplace(p.images(), static_cast<int>(elems.size())).second) {
                elems.push_back(std::move(p));
                if (elems.size() > kMaxOrder)
                    throw Error(ErrorKind::GroupTooLarge,
                                "group order exceeds " + std::to_string(kMaxOrder));
            }
        }
    }
    std::sort(elems.begin(), elems.end());

    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->degree_ = degree;
    g->name_ = std::move(name);
    g->generators_ = std::move(generators);
    g->elements_ = std::move(elems);
    const std::size_t n = g->elements_.size();
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < n; ++i)
        index.emplace(g->elements_[i].images(), static_cast<int>(i));
    g->table_.resize(n * n);
    g->inverse_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            int c = index.at((g->elements_[a] * g->elements_[b]).images());
            g->table_[a * n + b] = c;
            if (c == 0)
                g->inverse_[a] = static_cast<int>(b);
        }
    }
    return g;
}

GroupPtr FiniteGroup::from_cayley_table(const std::vector<std::vector<int>>& table, std::string name)
{
    const std::size_t n = table.size();
    if (n == 0)
        throw Error(ErrorKind::Parse, "empty Cayley table");
    for (const auto& row : table) {
        if (row.size() != n)
            throw Error(ErrorKind::Parse, "Cayley table is not square");
        for (int v : row)
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw Error(ErrorKind::Parse, "Cayley table entry out of range");
    }
    // columns must be bijections (checked by Permutation) and the product associative
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[static_cast<std::size_t>(table[a][b])][c] != table[a][static_cast<std::size_t>(table[b][c])])
                    throw Error(ErrorKind::Parse, "Cayley table is not associative");
    bool has_identity = false;
    for (std::size_t e = 0; e < n && !has_identity; ++e) {
        has_identity = true;
        for (std::size_t x = 0; x < n; ++x)
            if (table[e][x] != static_cast<int>(x) || table[x][e] != static_cast<int>(x))
                has_identity = false;
    }
    if (!has_identity)
        throw Error(ErrorKind::Parse, "Cayley table has no identity element");
    std::vector<Permutation> gens;
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<int> im(n);
        for (std::size_t x = 0; x < n; ++x)
            im[x] = table[x][a];
        gens.emplace_back(std::move(im)); // throws unless each column is a bijection
    }
    return from_generators(static_cast<int>(n), std::move(gens), std::move(name));
}

std::vector<int> FiniteGroup::generator_indices() const
{
    std::vector<int> out;
    for (const auto& g : generators_)
        out.push_back(*index_of(g));
    return out;
}

std::optional<int> FiniteGroup::index_of(const Permutation& p) const
{
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || *it != p)
        return std::nullopt;
    return static_cast<int>(it - elements_.begin());
}

int FiniteGroup::element_order(int a) const
{
    int k = 1;
    for (int x = a; x != 0; x = mul(x, a))
        ++k;
    return k;
}

bool ElementSet::subset_of(const ElementSet& o) const
{
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & ~o.bits_[i])
            return false;
    return true;
}

ElementSet ElementSet::intersect(const ElementSet& o) const
{
    ElementSet r(universe_);
    for (std::size_t i = 0; i < bits_.size(); ++i)
        r.bits_[i] = bits_[i] & o.bits_[i];
    return r;
}

std::size_t ElementSet::hash() const
{
    std::size_t h = 1469598103934665603ULL;
    for (auto w : bits_)
        h = (h ^ static_cast<std::size_t>(w)) * 1099511628211ULL;
    return h;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<int> members)
    : parent_(std::move(parent)), members_(std::move(members)), mask_(static_cast<std::size_t>(parent_->order()))
{
    std::sort(members_.begin(), members_.end());
    for (int m : members_)
        mask_.insert(m);
}

Subgroup Subgroup::generate(GroupPtr parent, const std::vector<int>& generators)
{
    const FiniteGroup& g = *parent;
    ElementSet seen(static_cast<std::size_t>(g.order()));
    std::vector<int> elems{0};
    seen.insert(0);
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (int s : generators) {
            int p = g.mul(elems[i], s);
            if (!seen.contains(p)) {
                seen.insert(p);
                elems.push_back(p);
            }
        }
    return Subgroup(std::move(parent), std::move(elems));
}

Subgroup Subgroup::whole(GroupPtr parent)
{
    std::vector<int> all(static_cast<std::size_t>(parent->order()));
    for (int i = 0; i < parent->order(); ++i)
        all[static_cast<std::size_t>(i)] = i;
    return Subgroup(std::move(parent), std::move(all));
}

std::vector<int> Subgroup::generators() const
{
    std::vector<int> gens;
    Subgroup current = trivial(parent_);
    // prefer elements of large order so that cyclic groups get one generator
    std::vector<int> by_order = members_;
    std::stable_sort(by_order.begin(), by_order.end(), [&](int a, int b) {
        return parent_->element_order(a) > parent_->element_order(b);
    });
    for (int m : by_order) {
        if (current.order() == order())
            break;
        if (!current.contains(m)) {
            gens.push_back(m);
            current = generate(parent_, gens);
        }
    }
    std::sort(gens.begin(), gens.end());
    return gens;
}

std::string Subgroup::describe() const
{
    auto gens = generators();
    if (gens.empty())
        return "{()}";
    std::string s = "{";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i)
            s += "; ";
        s += parent_->element(gens[i]).to_cycles();
    }
    return s + "}";
}

bool operator<(const Subgroup& a, const Subgroup& b)
{
    if (a.order() != b.order())
        return a.order() < b.order();
    return a.members_ < b.members_;
}

namespace {

std::vector<Subgroup> enumerate_within(const GroupPtr& g, const std::vector<int>& universe)
{
    std::unordered_set<Subgroup, SubgroupHash> found;
    std::deque<Subgroup> queue;
    Subgroup triv = Subgroup::trivial(g);
    found.insert(triv);
    queue.push_back(triv);
    while (!queue.empty()) {
        Subgroup h = std::move(queue.front());
        queue.pop_front();
        auto gens = h.generators();
        for (int x : universe) {
            if (h.contains(x))
                continue;
            auto ext = gens;
            ext.push_back(x);
            Subgroup k = Subgroup::generate(g, ext);
            if (found.insert(k).second)
                queue.push_back(std::move(k));
        }
    }
    std::vector<Subgroup> out(found.begin(), found.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Subgroup> enumerate_subgroups(const GroupPtr& g, std::size_t bound)
{
    if (static_cast<std::size_t>(g->order()) > bound)
        throw Error(ErrorKind::GroupTooLarge, "group order " + std::to_string(g->order()) +
                                                  " exceeds subgroup enumeration bound " + std::to_string(bound));
    return enumerate_within(g, Subgroup::whole(g).members());
}

std::vector<Subgroup> enumerate_subgroups_of(const Subgroup& h)
{
    return enumerate_within(h.parent(), h.members());
}

Subgroup conjugate(const Subgroup& h, int g)
{
    const FiniteGroup& G = h.group();
    std::vector<int> m;
    m.reserve(h.members().size());
    for (int x : h.members())
        m.push_back(G.conj(x, g));
    return Subgroup(h.parent(), std::move(m));
}

Subgroup intersect(const Subgroup& h, const Subgroup& k)
{
    std::vector<int> m;
    for (int x : h.members())
        if (k.contains(x))
            m.push_back(x);
    return Subgroup(h.parent(), std::move(m));
}

Subgroup normalizer(const Subgroup& h)
{
    const FiniteGroup& G = h.group();
    std::vector<int> m;
    for (int g = 0; g < G.order(); ++g) {
        bool ok = true;
        for (int x : h.members())
            if (!h.contains(G.conj(x, g))) {
                ok = false;
                break;
            }
        if (ok)
            m.push_back(g);
    }
    return Subgroup(h.parent(), std::move(m));
}

std::optional<int> subconjugacy_witness(const Subgroup& h, const Subgroup& k)
{
    if (h.order() > k.order() || k.order() % h.order() != 0)
        return std::nullopt;
    const FiniteGroup& G = h.group();
    for (int g = 0; g < G.order(); ++g) {
        bool ok = true;
        for (int x : h.members())
            if (!k.contains(G.conj(x, g))) {
                ok = false;
                break;
            }
        if (ok)
            return g;
    }
    return std::nullopt;
}

std::optional<int> are_conjugate(const Subgroup& h, const Subgroup& k)
{
    if (h.order() != k.order())
        return std::nullopt;
    return subconjugacy_witness(h, k);
}

bool is_normal(const Subgroup& h)
{
    return normalizer(h).order() == h.group().order();
}

Subgroup canonical_conjugate(const Subgroup& h)
{
    Subgroup best = h;
    for (int g = 1; g < h.group().order(); ++g) {
        Subgroup c = conjugate(h, g);
        if (c.members() < best.members())
            best = std::move(c);
    }
    return best;
}

Subgroup SubgroupEmbedding::pull_back(const Subgroup& parent_subgroup) const
{
    std::vector<int> m;
    for (int x : parent_subgroup.members())
        if (from_parent[static_cast<std::size_t>(x)] >= 0)
            m.push_back(from_parent[static_cast<std::size_t>(x)]);
    return Subgroup(group, std::move(m));
}

Subgroup SubgroupEmbedding::push_forward(const Subgroup& sub_subgroup) const
{
    std::vector<int> m;
    for (int x : sub_subgroup.members())
        m.push_back(to_parent[static_cast<std::size_t>(x)]);
    return Subgroup(image.parent(), std::move(m));
}

SubgroupEmbedding embed_subgroup(const Subgroup& k)
{
    const FiniteGroup& G = k.group();
    std::vector<Permutation> gens;
    for (int x : k.generators())
        gens.push_back(G.element(x));
    SubgroupEmbedding e;
    e.group = FiniteGroup::from_generators(G.degree(), std::move(gens), G.name() + "_sub");
    e.image = k;
    e.to_parent.resize(static_cast<std::size_t>(e.group->order()));
    e.from_parent.assign(static_cast<std::size_t>(G.order()), -1);
    for (int i = 0; i < e.group->order(); ++i) {
        int p = *G.index_of(e.group->element(i));
        e.to_parent[static_cast<std::size_t>(i)] = p;
        e.from_parent[static_cast<std::size_t>(p)] = i;
    }
    return e;
}

Subgroup ProductGroup::product_subgroup(const Subgroup& h1, const Subgroup& h2) const
{
    std::vector<int> m;
    for (int a : h1.members())
        for (int b : h2.members())
            m.push_back(make(a, b));
    return Subgroup(group, std::move(m));
}

ProductGroup direct_product(const GroupPtr& g1, const GroupPtr& g2)
{
    const int d1 = g1->degree();
    const int d2 = g2->degree();
    auto lift = [&](const Permutation& p, int offset) {
        std::vector<int> im(static_cast<std::size_t>(d1 + d2));
        for (int i = 0; i < d1 + d2; ++i)
            im[static_cast<std::size_t>(i)] = i;
        for (int i = 0; i < p.degree(); ++i)
            im[static_cast<std::size_t>(offset + i)] = offset + p(i);
        return Permutation(std::move(im));
    };
    std::vector<Permutation> gens;
    for (const auto& s : g1->generators())
        gens.push_back(lift(s, 0));
    for (const auto& s : g2->generators())
        gens.push_back(lift(s, d1));
    ProductGroup pg;
    pg.group = FiniteGroup::from_generators(d1 + d2, std::move(gens), g1->name() + "x" + g2->name());
    if (pg.group->order() != g1->order() * g2->order())
        throw Error(ErrorKind::InvalidArgument, "generators of a factor do not generate it");
    pg.order2 = static_cast<std::size_t>(g2->order());
    pg.first.resize(static_cast<std::size_t>(pg.group->order()));
    pg.second.resize(pg.first.size());
    pg.pair_table.resize(pg.first.size());
    for (int a = 0; a < g1->order(); ++a)
        for (int b = 0; b < g2->order(); ++b) {
            int p = *pg.group->index_of(lift(g1->element(a), 0) * lift(g2->element(b), d1));
            pg.first[static_cast<std::size_t>(p)] = a;
            pg.second[static_cast<std::size_t>(p)] = b;
            pg.pair_table[static_cast<std::size_t>(a) * pg.order2 + b] = p;
        }
    return pg;
}

} // namespace bredon

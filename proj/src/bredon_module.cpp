#include "bredon/bredon_module.hpp"

#include <limits>

#include "bredon/error.hpp"

namespace bredon {

namespace {
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
}

std::string_view to_string(Variance v)
{
    return v == Variance::Right ? "right" : "left";
}

BredonModule BredonModule::from_table(CategoryPtr cat, Variance v, std::vector<std::size_t> ranks,
                                      std::vector<IntMatrix> actions)
{
    if (ranks.size() != cat->object_count())
        throw Error(ErrorKind::InvalidArgument, "module needs one rank per object");
    if (actions.size() != cat->morphism_count())
        throw Error(ErrorKind::InvalidArgument, "module needs one action per morphism");
    BredonModule m;
    m.cat_ = std::move(cat);
    m.variance_ = v;
    m.ranks_ = std::move(ranks);
    m.cache_ = std::make_shared<Cache>();
    for (std::size_t id = 0; id < actions.size(); ++id) {
        const auto& f = m.cat_->morphism(id);
        std::size_t rows = v == Variance::Right ? m.ranks_[f.source] : m.ranks_[f.target];
        std::size_t cols = v == Variance::Right ? m.ranks_[f.target] : m.ranks_[f.source];
        if (actions[id].rows() != rows || actions[id].cols() != cols)
            throw Error(ErrorKind::InvalidArgument,
                        "action of morphism " + std::to_string(id) + " has shape " +
                            std::to_string(actions[id].rows()) + "x" + std::to_string(actions[id].cols()) +
                            ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
        m.cache_->actions.push_back(std::make_unique<IntMatrix>(std::move(actions[id])));
    }
    return m;
}

BredonModule BredonModule::zero(CategoryPtr cat, Variance v)
{
    std::vector<IntMatrix> actions;
    for (std::size_t id = 0; id < cat->morphism_count(); ++id)
        actions.emplace_back(0, 0);
    std::vector<std::size_t> ranks(cat->object_count(), 0);
    return from_table(std::move(cat), v, std::move(ranks), std::move(actions));
}

BredonModule BredonModule::trivial(CategoryPtr cat, Variance v)
{
    std::vector<IntMatrix> actions(cat->morphism_count(), IntMatrix::identity(1));
    std::vector<std::size_t> ranks(cat->object_count(), 1);
    return from_table(std::move(cat), v, std::move(ranks), std::move(actions));
}

BredonModule BredonModule::free_on(CategoryPtr cat, std::shared_ptr<const GSet> x)
{
    if (x->group() != cat->group() && x->group()->elements() != cat->group()->elements())
        throw Error(ErrorKind::InvalidArgument, "G-set is over a different group");
    BredonModule m;
    m.cat_ = std::move(cat);
    m.variance_ = Variance::Right;
    m.gset_ = std::move(x);
    const std::size_t n = m.cat_->object_count();
    m.ranks_.resize(n);
    m.basis_points_.resize(n);
    m.basis_position_.resize(n);
    for (std::size_t o = 0; o < n; ++o) {
        m.basis_points_[o] = m.gset_->fixed_points(m.cat_->subgroup(o));
        m.ranks_[o] = m.basis_points_[o].size();
        m.basis_position_[o].assign(m.gset_->size(), npos);
        for (std::size_t i = 0; i < m.basis_points_[o].size(); ++i)
            m.basis_position_[o][m.basis_points_[o][i]] = i;
    }
    for (std::size_t orbit = 0; orbit < m.gset_->orbit_count(); ++orbit) {
        Subgroup s(m.cat_->group(), m.gset_->orbit_stabilizer(orbit).members());
        if (!m.cat_->family().contains(s))
            m.stabilizers_in_family_ = false;
    }
    m.cache_ = std::make_shared<Cache>();
    m.cache_->actions.resize(m.cat_->morphism_count());
    return m;
}

BredonModule BredonModule::free_sum(CategoryPtr cat, const std::vector<std::size_t>& objects)
{
    std::vector<Subgroup> subs;
    for (auto o : objects)
        subs.push_back(cat->subgroup(o));
    auto x = std::make_shared<const GSet>(GSet::coset_union(cat->group(), subs));
    BredonModule m = free_on(std::move(cat), std::move(x));
    m.free_summands_ = objects;
    return m;
}

BredonModule BredonModule::free_left(CategoryPtr cat, std::size_t object)
{
    BredonModule m;
    m.cat_ = std::move(cat);
    m.variance_ = Variance::Left;
    m.left_free_object_ = object;
    const std::size_t n = m.cat_->object_count();
    m.ranks_.resize(n);
    for (std::size_t o = 0; o < n; ++o)
        m.ranks_[o] = m.cat_->hom(object, o).size();
    m.cache_ = std::make_shared<Cache>();
    m.cache_->actions.resize(m.cat_->morphism_count());
    return m;
}

BredonModule BredonModule::orbit_left(CategoryPtr cat, std::shared_ptr<const GSet> x)
{
    if (x->group() != cat->group() && x->group()->elements() != cat->group()->elements())
        throw Error(ErrorKind::InvalidArgument, "G-set is over a different group");
    BredonModule m;
    m.cat_ = std::move(cat);
    m.variance_ = Variance::Left;
    m.gset_ = std::move(x);
    const std::size_t n = m.cat_->object_count();
    m.ranks_.resize(n);
    m.basis_points_.resize(n);
    m.basis_position_.resize(n);
    for (std::size_t o = 0; o < n; ++o) {
        auto& label = m.basis_position_[o];
        label.assign(m.gset_->size(), npos);
        for (std::size_t p = 0; p < m.gset_->size(); ++p) {
            if (label[p] != npos)
                continue;
            std::size_t id = m.basis_points_[o].size();
            m.basis_points_[o].push_back(p);
            for (int h : m.cat_->subgroup(o).members())
                label[m.gset_->act(h, p)] = id;
        }
        m.ranks_[o] = m.basis_points_[o].size();
    }
    m.cache_ = std::make_shared<Cache>();
    m.cache_->actions.resize(m.cat_->morphism_count());
    return m;
}

std::size_t BredonModule::total_rank() const
{
    std::size_t t = 0;
    for (auto r : ranks_)
        t += r;
    return t;
}

const IntMatrix& BredonModule::act(std::size_t morphism_id) const
{
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto& slot = cache_->actions.at(morphism_id);
    if (!slot)
        slot = std::make_unique<IntMatrix>(compute_action(morphism_id));
    return *slot;
}

IntMatrix BredonModule::compute_action(std::size_t morphism_id) const
{
    const OrbitMorphism& f = cat_->morphism(morphism_id);
    if (gset_ && variance_ == Variance::Left) {
        IntMatrix a(ranks_[f.target], ranks_[f.source]);
        const int inv = cat_->group()->inv(f.rep);
        const auto& pts = basis_points_[f.source];
        for (std::size_t c = 0; c < pts.size(); ++c)
            a(basis_position_[f.target][gset_->act(inv, pts[c])], c) = 1;
        return a;
    }
    if (gset_) {
        IntMatrix a(ranks_[f.source], ranks_[f.target]);
        const auto& pts = basis_points_[f.target];
        for (std::size_t c = 0; c < pts.size(); ++c) {
            std::size_t r = basis_position_[f.source][gset_->act(f.rep, pts[c])];
            a(r, c) = 1;
        }
        return a;
    }
    if (left_free_object_) {
        const auto& from = cat_->hom(*left_free_object_, f.source);
        const auto& to = cat_->hom(*left_free_object_, f.target);
        IntMatrix a(to.size(), from.size());
        for (std::size_t c = 0; c < from.size(); ++c)
            a(cat_->compose(f, from[c]).position, c) = 1;
        return a;
    }
    throw Error(ErrorKind::InvalidArgument, "module has no action for morphism " + std::to_string(morphism_id));
}

bool BredonModule::is_functorial() const
{
    const OrbitCategory& c = *cat_;
    for (std::size_t o = 0; o < c.object_count(); ++o)
        if (!(act(c.identity(o)) == IntMatrix::identity(ranks_[o])))
            return false;
    const std::size_t n = c.object_count();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (const auto& f : c.hom(a, b))
                for (std::size_t d = 0; d < n; ++d)
                    for (const auto& g : c.hom(b, d)) {
                        const IntMatrix& gf = act(c.compose(g, f));
                        IntMatrix expect = variance_ == Variance::Right ? act(f) * act(g) : act(g) * act(f);
                        if (!(gf == expect))
                            return false;
                    }
    return true;
}

BredonMorphism BredonMorphism::identity(const BredonModule& m)
{
    BredonMorphism phi;
    phi.source = &m;
    phi.target = &m;
    for (auto r : m.ranks())
        phi.components.push_back(IntMatrix::identity(r));
    return phi;
}

bool check_natural(const BredonMorphism& phi)
{
    const BredonModule& m = *phi.source;
    const BredonModule& n = *phi.target;
    if (m.variance() != n.variance())
        throw Error(ErrorKind::VarianceMismatch, "natural transformation between modules of different variance");
    const OrbitCategory& c = m.category();
    if (phi.components.size() != c.object_count())
        return false;
    for (std::size_t o = 0; o < c.object_count(); ++o)
        if (phi.components[o].rows() != n.rank(o) || phi.components[o].cols() != m.rank(o))
            return false;
    for (const auto& f : c.morphisms()) {
        const IntMatrix& ps = phi.components[f.source];
        const IntMatrix& pt = phi.components[f.target];
        bool ok = m.variance() == Variance::Right ? n.act(f) * pt == ps * m.act(f)
                                                  : n.act(f) * ps == pt * m.act(f);
        if (!ok)
            return false;
    }
    return true;
}

BredonModule direct_sum(const BredonModule& a, const BredonModule& b)
{
    if (a.variance() != b.variance())
        throw Error(ErrorKind::VarianceMismatch, "direct sum of modules of different variance");
    const OrbitCategory& c = a.category();
    std::vector<std::size_t> ranks;
    for (std::size_t o = 0; o < c.object_count(); ++o)
        ranks.push_back(a.rank(o) + b.rank(o));
    std::vector<IntMatrix> actions;
    for (const auto& f : c.morphisms()) {
        const IntMatrix& x = a.act(f);
        const IntMatrix& y = b.act(f);
        IntMatrix s(x.rows() + y.rows(), x.cols() + y.cols());
        s.set_block(0, 0, x);
        s.set_block(x.rows(), x.cols(), y);
        actions.push_back(std::move(s));
    }
    return BredonModule::from_table(a.category_ptr(), a.variance(), std::move(ranks), std::move(actions));
}

} // namespace bredon

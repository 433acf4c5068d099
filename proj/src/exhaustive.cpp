#include "exhaustive.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <unordered_map>

#include "scl/errors.hpp"

namespace scl::detail {

namespace {

// What the evaluation knows so far: a value (or nothing) for each domain atom
// and for any atom the schema itself mentions.
class Memory {
public:
    explicit Memory(const Domain& d) : d_(d), dom_(d.atoms.size(), 0) {}

    std::size_t state() const {
        std::size_t s = 0;
        for (std::size_t i = dom_.size(); i-- > 0;) {
            s = s * 3 + static_cast<std::size_t>(dom_[i]);
        }
        return s;
    }

    void load_state(std::size_t s) {
        for (auto& v : dom_) {
            v = static_cast<std::int8_t>(s % 3);
            s /= 3;
        }
    }

    std::optional<bool> get(const Atom& a) const {
        int i = index_of(a);
        if (i >= 0) {
            if (dom_[i] == 0) return std::nullopt;
            return dom_[i] == 1;
        }
        for (const auto& [name, value] : other_) {
            if (name == a.name()) return value;
        }
        return std::nullopt;
    }

    void set(const Atom& a, bool value) {
        int i = index_of(a);
        if (i >= 0) {
            dom_[i] = value ? 1 : 2;
        } else {
            other_.emplace_back(a.name(), value);
        }
    }

    void unset(const Atom& a) {
        int i = index_of(a);
        if (i >= 0) {
            dom_[i] = 0;
        } else {
            auto it = std::find_if(other_.begin(), other_.end(),
                                   [&](const auto& kv) { return kv.first == a.name(); });
            other_.erase(it);
        }
    }

private:
    int index_of(const Atom& a) const {
        for (std::size_t i = 0; i < d_.atoms.size(); ++i) {
            if (d_.atoms[i] == a) return static_cast<int>(i);
        }
        return -1;
    }

    const Domain& d_;
    std::vector<std::int8_t> dom_;
    std::vector<std::pair<std::string, bool>> other_;
};

// The mem-basic form p turns into when evaluation starts from memory m.
BasicForm mf_in(const BasicForm& p, Memory& m) {
    if (p.is_leaf()) {
        return p;
    }
    if (auto known = m.get(p.atom())) {
        return mf_in(*known ? p.on_true() : p.on_false(), m);
    }
    m.set(p.atom(), true);
    BasicForm l = mf_in(p.on_true(), m);
    m.unset(p.atom());
    m.set(p.atom(), false);
    BasicForm r = mf_in(p.on_false(), m);
    m.unset(p.atom());
    return BasicForm::node(p.atom(), std::move(l), std::move(r));
}

void key_of(const BasicForm& p, const Domain& d, std::string& out) {
    switch (p.kind()) {
        case BasicForm::Kind::True: out += 'T'; return;
        case BasicForm::Kind::False: out += 'F'; return;
        case BasicForm::Kind::Undef: out += 'U'; return;
        case BasicForm::Kind::Node: break;
    }
    auto it = std::find(d.atoms.begin(), d.atoms.end(), p.atom());
    out += static_cast<char>('0' + (it - d.atoms.begin()));
    key_of(p.on_true(), d, out);
    key_of(p.on_false(), d, out);
}

Domain build_domain(int k, bool three_valued, const std::vector<std::string>& avoid) {
    Domain d;
    for (int i = 1; static_cast<int>(d.atoms.size()) < k; ++i) {
        std::string name = "v" + std::to_string(i);
        if (std::find(avoid.begin(), avoid.end(), name) == avoid.end()) {
            d.atoms.emplace_back(name);
        }
    }
    d.forms = enumerate_mem_forms(d.atoms, three_valued);
    std::size_t states = 1;
    for (int i = 0; i < k; ++i) states *= 3;
    std::unordered_map<std::string, std::uint32_t> ids;
    d.class_of.assign(states, std::vector<std::uint32_t>(d.forms.size()));
    Memory m(d);
    for (std::size_t s = 0; s < states; ++s) {
        m.load_state(s);
        for (std::size_t f = 0; f < d.forms.size(); ++f) {
            BasicForm b = mf_in(d.forms[f], m);
            std::string key;
            key_of(b, d, key);
            auto [it, fresh] = ids.emplace(key, static_cast<std::uint32_t>(d.class_form.size()));
            if (fresh) {
                d.class_form.push_back(b);
            }
            d.class_of[s][f] = it->second;
        }
    }
    return d;
}

struct Split {
    std::string var;
    std::size_t state;
};

// Frames on the sweep's stack share the candidate sets they did not split.
using CandidateSet = std::shared_ptr<const std::vector<std::uint32_t>>;
using Candidates = std::map<std::string, CandidateSet>;

class Evaluator {
public:
    Evaluator(const Domain& d, const Candidates& cands) : d_(d), cands_(cands) {}

    BasicForm eval(const Term& t, Memory& m) {
        switch (t.op()) {
            case Op::True: return BasicForm::leaf_t();
            case Op::False: return BasicForm::leaf_f();
            case Op::Undef: return BasicForm::leaf_u();
            case Op::Atom: {
                Atom a(t.name());
                if (auto known = m.get(a)) {
                    return *known ? BasicForm::leaf_t() : BasicForm::leaf_f();
                }
                return BasicForm::node(a, BasicForm::leaf_t(), BasicForm::leaf_f());
            }
            case Op::Var: return read(t.name(), m);
            case Op::Cond: return graft(eval(t.child(1), m), t.child(0), t.child(2), m);
            default: throw InvariantError("exhaustive sweep expects a core term");
        }
    }

private:
    BasicForm read(const std::string& var, const Memory& m) {
        const std::vector<std::uint32_t>& cands = *cands_.at(var);
        std::size_t s = m.state();
        const std::vector<std::uint32_t>& cls = d_.class_of[s];
        std::uint32_t c = cls[cands.front()];
        for (std::uint32_t f : cands) {
            if (cls[f] != c) {
                throw Split{var, s};
            }
        }
        return d_.class_form[c];
    }

    // The guard's form g, with each T leaf continuing as `then` and each F
    // leaf as `els`, under the memory of the path leading there.
    BasicForm graft(const BasicForm& g, const Term& then, const Term& els, Memory& m) {
        switch (g.kind()) {
            case BasicForm::Kind::True: return eval(then, m);
            case BasicForm::Kind::False: return eval(els, m);
            case BasicForm::Kind::Undef: return g;
            case BasicForm::Kind::Node: break;
        }
        m.set(g.atom(), true);
        BasicForm l = graft(g.on_true(), then, els, m);
        m.unset(g.atom());
        m.set(g.atom(), false);
        BasicForm r = graft(g.on_false(), then, els, m);
        m.unset(g.atom());
        return BasicForm::node(g.atom(), std::move(l), std::move(r));
    }

    const Domain& d_;
    const Candidates& cands_;
};

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b, bool& saturated) {
    if (a != 0 && b > UINT64_MAX / a) {
        saturated = true;
        return UINT64_MAX;
    }
    return a * b;
}

}  // namespace

const Domain& domain(int k, bool three_valued, const std::vector<std::string>& avoid) {
    static std::mutex mu;
    static std::map<std::tuple<int, bool, std::vector<std::string>>, std::unique_ptr<Domain>> cache;
    std::vector<std::string> key_avoid = avoid;
    std::sort(key_avoid.begin(), key_avoid.end());
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(k, three_valued, key_avoid);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, std::make_unique<Domain>(build_domain(k, three_valued, key_avoid))).first;
    }
    return *it->second;
}

BasicForm sem(const Term& core, const std::map<std::string, std::size_t>& assignment, const Domain& d) {
    Candidates cands;
    for (const auto& [var, f] : assignment) {
        cands[var] = std::make_shared<const std::vector<std::uint32_t>>(1, static_cast<std::uint32_t>(f));
    }
    Evaluator ev(d, cands);
    Memory m(d);
    return ev.eval(core, m);
}

SweepResult sweep(const Term& lhs_core, const Term& rhs_core, const std::vector<std::string>& vars,
                  const Domain& d, std::uint64_t budget) {
    SweepResult out;
    auto all = std::make_shared<std::vector<std::uint32_t>>(d.forms.size());
    for (std::size_t i = 0; i < all->size(); ++i) (*all)[i] = static_cast<std::uint32_t>(i);
    std::vector<Candidates> stack;
    Candidates root;
    for (const std::string& v : vars) root[v] = all;
    stack.push_back(std::move(root));

    while (!stack.empty()) {
        if (out.evaluations >= budget) {
            out.budget_exceeded = true;
            break;
        }
        Candidates frame = std::move(stack.back());
        stack.pop_back();
        ++out.evaluations;
        BasicForm l = BasicForm::leaf_u();
        BasicForm r = BasicForm::leaf_u();
        try {
            Evaluator ev(d, frame);
            Memory ml(d);
            l = ev.eval(lhs_core, ml);
            Memory mr(d);
            r = ev.eval(rhs_core, mr);
        } catch (const Split& split) {
            // Partition by behaviour in the offending state, keeping first-seen
            // order so the walk is deterministic.
            const std::vector<std::uint32_t>& cls = d.class_of[split.state];
            std::vector<std::uint32_t> order;
            std::map<std::uint32_t, std::vector<std::uint32_t>> parts;
            for (std::uint32_t f : *frame.at(split.var)) {
                auto& part = parts[cls[f]];
                if (part.empty()) order.push_back(cls[f]);
                part.push_back(f);
            }
            for (auto c = order.rbegin(); c != order.rend(); ++c) {
                Candidates next = frame;
                next[split.var] = std::make_shared<const std::vector<std::uint32_t>>(std::move(parts[*c]));
                stack.push_back(std::move(next));
            }
            continue;
        }
        std::uint64_t covered = 1;
        for (const auto& [var, cands] : frame) {
            covered = saturating_mul(covered, cands->size(), out.saturated);
        }
        out.covered = out.covered > UINT64_MAX - covered ? (out.saturated = true, UINT64_MAX)
                                                         : out.covered + covered;
        if (!(l == r)) {
            out.refuted = true;
            for (const auto& [var, cands] : frame) {
                out.witness[var] = cands->front();
            }
            break;
        }
    }
    return out;
}

}  // namespace scl::detail

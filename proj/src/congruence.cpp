#include "scl/congruence.hpp"

#include <sstream>
#include <unordered_map>

#include "scl/errors.hpp"
#include "scl/translate.hpp"

namespace scl {

std::string describe(const Mode& mode) {
    std::string out = mode.congruence == Congruence::Free ? "free" : "mem";
    if (mode.three_valued) {
        out += ", three-valued";
    }
    return out;
}

BasicForm normalize(const Term& t, const Mode& mode) {
    if (mode.congruence == Congruence::Free) {
        return bf(to_core(t));
    }
    return mbf(t).form();
}

bool equiv(const Term& p, const Term& q, const Mode& mode) {
    for (const Term* t : {&p, &q}) {
        if (!t->is_closed()) {
            throw OpenTermError(variables_of(*t).front());
        }
    }
    return normalize(p, mode) == normalize(q, mode);
}

const char* to_string(Truth v) {
    switch (v) {
        case Truth::True: return "T";
        case Truth::False: return "F";
        case Truth::Undef: return "U";
    }
    return "?";
}

Valuation parse_valuation(std::string_view text) {
    Valuation out;
    std::size_t pos = 0;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    if (trim(text).empty()) {
        return out;
    }
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) {
            comma = text.size();
        }
        std::string_view item = trim(text.substr(pos, comma - pos));
        std::size_t eq = item.find('=');
        std::string_view name = eq == std::string_view::npos ? item : trim(item.substr(0, eq));
        std::string_view value = eq == std::string_view::npos ? "" : trim(item.substr(eq + 1));
        if (!Atom::is_valid(name) || (value != "0" && value != "1")) {
            throw ParseError(1, pos + 1, {"atom=0", "atom=1"}, "'" + std::string(item) + "'");
        }
        out[Atom(std::string(name))] = value == "1";
        pos = comma + 1;
    }
    return out;
}

Truth eval(const Term& t, const Valuation& v) {
    BasicForm p = mbf(t).form();
    while (!p.is_leaf()) {
        auto it = v.find(p.atom());
        if (it == v.end()) {
            throw UnboundAtomError(p.atom().name());
        }
        p = it->second ? p.on_true() : p.on_false();
    }
    switch (p.kind()) {
        case BasicForm::Kind::True: return Truth::True;
        case BasicForm::Kind::False: return Truth::False;
        default: return Truth::Undef;
    }
}

namespace {

Truth negate(Truth v) {
    switch (v) {
        case Truth::True: return Truth::False;
        case Truth::False: return Truth::True;
        default: return Truth::Undef;
    }
}

class Tracer {
public:
    explicit Tracer(const Valuation& v) : v_(v) {}

    Truth run(const Term& t) {
        switch (t.op()) {
            case Op::True: return Truth::True;
            case Op::False: return Truth::False;
            case Op::Undef: return Truth::Undef;
            case Op::Var: throw OpenTermError(t.name());
            case Op::Atom: return inspect(Atom(t.name()));
            case Op::Cond: {
                Truth g = run(t.child(1));
                if (g == Truth::Undef) return g;
                return run(t.child(g == Truth::True ? 0 : 2));
            }
            case Op::Not: return negate(run(t.child(0)));
            default: break;
        }
        // Every binary connective inspects its left argument first; an
        // undefined left argument ends the evaluation.
        Truth x = run(t.child(0));
        if (x == Truth::Undef) return x;
        bool left = x == Truth::True;
        switch (t.op()) {
            case Op::And: return left ? run(t.child(1)) : Truth::False;
            case Op::Or: return left ? Truth::True : run(t.child(1));
            case Op::Iff: return left ? run(t.child(1)) : negate(run(t.child(1)));
            case Op::Xor: return left ? negate(run(t.child(1))) : run(t.child(1));
            case Op::Nand: return left ? negate(run(t.child(1))) : Truth::True;
            case Op::Nor: return left ? Truth::False : negate(run(t.child(1)));
            default: throw InvariantError("trace_eval: unhandled operator");
        }
    }

    std::vector<Atom> inspected;

private:
    Truth inspect(const Atom& a) {
        auto seen = memory_.find(a);
        if (seen != memory_.end()) {
            return seen->second ? Truth::True : Truth::False;
        }
        auto it = v_.find(a);
        if (it == v_.end()) {
            throw UnboundAtomError(a.name());
        }
        memory_.emplace(a, it->second);
        inspected.push_back(a);
        return it->second ? Truth::True : Truth::False;
    }

    const Valuation& v_;
    std::map<Atom, bool> memory_;
};

}  // namespace

Trace trace_eval(const Term& t, const Valuation& v) {
    Tracer tracer(v);
    Truth value = tracer.run(t);
    return Trace{value, std::move(tracer.inspected)};
}

std::string to_dot(const BasicForm& p) {
    std::ostringstream out;
    out << "digraph bf {\n";
    std::size_t next = 0;
    auto go = [&](auto&& self, const BasicForm& n) -> std::size_t {
        std::size_t id = next++;
        switch (n.kind()) {
            case BasicForm::Kind::True:
            case BasicForm::Kind::False:
            case BasicForm::Kind::Undef: {
                const char* label = n.kind() == BasicForm::Kind::True    ? "T"
                                    : n.kind() == BasicForm::Kind::False ? "F"
                                                                         : "U";
                out << "  n" << id << " [label=\"" << label << "\", shape=box];\n";
                return id;
            }
            case BasicForm::Kind::Node: break;
        }
        out << "  n" << id << " [label=\"" << n.atom().name() << "\"];\n";
        std::size_t t = self(self, n.on_true());
        out << "  n" << id << " -> n" << t << " [label=\"T\"];\n";
        std::size_t f = self(self, n.on_false());
        out << "  n" << id << " -> n" << f << " [label=\"F\"];\n";
        return id;
    };
    go(go, p);
    out << "}\n";
    return out.str();
}

}  // namespace scl

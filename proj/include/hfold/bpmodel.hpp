#pragma once

// Bridge between the rewriting rules and the D6 matrix model: the rules
// must preserve the product invariant gamma_f(g) = prod w_{delta_i} g_i.

#include "hfold/blueprint.hpp"
#include "hfold/chevverify.hpp"

namespace hfold {

/// gamma_f of a state: letters index the H3 base, each Weyl element is
/// the standard folded w(1,1).
template <CommutativeRing R>
SparseMatrix<R> gamma_map(const ChevalleyModel<R>& model, const std::string& word,
                          const std::vector<typename PairRing<R>::Elem>& values)
{
    const RootSystem& h = model.h();
    auto out = SparseMatrix<R>::identity(model.ring, model.dim());
    for (size_t i = 0; i < word.size(); ++i) {
        int rho = h.base_index(word[i] - '1');
        auto w = model.folded_weyl(rho, model.ring.one(), model.ring.one());
        out = mul(model.ring, out, w);
        out = mul(model.ring, out,
                  model.folded_elem(rho, values[i].first, values[i].second));
    }
    return out;
}

/// Validate one elementary rule as a rewriting rule in the D6 model:
/// gamma_target(rule(x)) = gamma_source(x) over a polynomial ring with two
/// variables per letter.
inline CheckResult validate_rule_in_model(const std::string& source,
                                          const std::string& target)
{
    CheckResult c;
    c.id = "rule " + source + " -> " + target;
    c.anchor = "blueprint/gamma-preservation";
    std::vector<std::string> names;
    for (size_t i = 0; i < source.size(); ++i) {
        names.push_back("x" + std::to_string(i));
        names.push_back("y" + std::to_string(i));
    }
    PolyRing ring(names);
    ChevalleyModel<PolyRing> model(Kind::D6, ring, model_twist(Kind::D6));
    PairProvider<PolyRing> prov(ring);
    BlueprintState<PairProvider<PolyRing>> st{source, {}};
    for (size_t i = 0; i < source.size(); ++i)
        st.values.push_back(prov.S.make(ring.var(2 * i), ring.var(2 * i + 1)));
    try {
        auto moved = apply_move(prov, st, target);
        auto lhs = gamma_map(model, st.word, st.values);
        auto rhs = gamma_map(model, moved.word, moved.values);
        c.pass = lhs == rhs;
        if (!c.pass)
            c.witness = first_difference(ring, lhs, rhs);
    } catch (const std::exception& ex) {
        c.pass = false;
        c.witness = ex.what();
    }
    return c;
}

inline SuiteReport verify_blueprint_rules()
{
    SuiteReport rep{"blueprint-rules"};
    rep.checks.push_back(validate_rule_in_model("121", "212"));
    rep.checks.push_back(validate_rule_in_model("212", "121"));
    rep.checks.push_back(validate_rule_in_model("13", "31"));
    rep.checks.push_back(validate_rule_in_model("31", "13"));
    rep.checks.push_back(validate_rule_in_model("23232", "32323"));
    rep.checks.push_back(validate_rule_in_model("32323", "23232"));
    return rep;
}

} // namespace hfold

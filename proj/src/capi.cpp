#include "uclone.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "uclone/catalog.hpp"
#include "uclone/csp.hpp"
#include "uclone/formula.hpp"
#include "uclone/io.hpp"
#include "uclone/ppart.hpp"
#include "uclone/reduce.hpp"
#include "uclone/weakbase.hpp"

struct uc_language {
    uclone::Language lang{2};
    std::string path;  ///< source file, used when printing definitions
};

struct uc_instance {
    uclone::Instance inst;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class Fn>
uc_status wrap(Fn&& fn) {
    try {
        fn();
        return UC_OK;
    } catch (const uclone::parse_error& e) {
        g_last_error = e.what();
        return UC_ERR_PARSE;
    } catch (const uclone::budget_error& e) {
        g_last_error = e.what();
        return UC_ERR_BUDGET;
    } catch (const uclone::error& e) {
        g_last_error = e.what();
        return UC_ERR_INVALID;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return UC_ERR_IO;
    }
}

uclone::Budget budget_of(const uc_limits* lim) {
    uclone::Budget b = uclone::default_budget();
    if (lim) {
        if (lim->max_arity > 0) {
            b.pol_arity_d2 = lim->max_arity;
            b.pol_arity_other = lim->max_arity;
        }
        if (lim->max_vars > 0) b.csp_vars = lim->max_vars;
    }
    return b;
}

int max_aux_of(const uc_limits* lim) {
    return lim && lim->max_aux > 0 ? lim->max_aux : 2;
}

/// "<langfile>:<NAME>" or a path whose language holds a single relation.
uclone::Relation load_target(const std::string& spec) {
    auto colon = spec.rfind(':');
    if (colon != std::string::npos && colon > 0 && colon + 1 < spec.size()) {
        std::ifstream probe(spec.substr(0, colon));
        if (probe.good()) {
            uclone::Language g = uclone::load_language(spec.substr(0, colon));
            return g.at(spec.substr(colon + 1));
        }
    }
    uclone::Language g = uclone::load_language(spec);
    if (g.relations().size() != 1)
        throw uclone::error("target file " + spec + " must hold exactly one relation");
    return g.relations()[0];
}

const char* covered_word(uclone::Covered c) {
    switch (c) {
        case uclone::Covered::Covered: return "covered";
        case uclone::Covered::NotCovered: return "not-covered";
        default: return "frozen-collapse";
    }
}

std::string usat_line(const uclone::UsatVerdict& v) {
    using K = uclone::UsatVerdict::Kind;
    if (v.kind == K::USComplete) return "VERDICT usat-class US-complete\n";
    if (v.kind == K::CoNPComplete) return "VERDICT usat-class co-NP-complete\n";
    return "VERDICT usat-class tractable " + v.reason + "\n";
}

std::vector<uclone::Operation> load_generators(const std::string& spec, int* domain) {
    uclone::CloneCatalog cat;
    if (const uclone::CloneEntry* e = cat.find(spec)) {
        *domain = 2;
        return e->generators;
    }
    std::ifstream probe(spec);
    if (!probe.good())
        throw uclone::error("unknown clone name and unreadable file: " + spec);
    // File of `pop` blocks; every operation must be total.
    std::string text = uclone::read_file(spec);
    std::vector<uclone::Operation> out;
    std::string block;
    std::istringstream in(text);
    std::string line;
    auto flush = [&]() {
        if (block.find("pop") == std::string::npos) return;
        uclone::PartialOperation p = uclone::parse_pop(block);
        std::vector<std::uint8_t> table;
        for (std::int8_t v : p.table()) {
            if (v < 0) throw uclone::error("generator file holds a partial operation");
            table.push_back(static_cast<std::uint8_t>(v));
        }
        out.push_back(uclone::Operation::make(p.name(), p.arity(), p.domain(),
                                              std::move(table)));
        *domain = p.domain();
        block.clear();
    };
    while (std::getline(in, line)) {
        if (line.rfind("pop", 0) == 0) flush();
        block += line;
        block += '\n';
    }
    flush();
    if (out.empty()) throw uclone::error("no operations in generator file " + spec);
    return out;
}

std::string model_line(const char* tag, const std::vector<std::string>& vars,
                       const uclone::Tuple& t) {
    std::string s = tag;
    for (std::size_t i = 0; i < vars.size(); ++i)
        s += " " + vars[i] + "=" + std::to_string(int(t[i]));
    return s + "\n";
}

void write_reduced(const uclone::Instance& inst, const char* out_lang_path,
                   char** out) {
    std::ofstream lf(out_lang_path);
    if (!lf) throw uclone::error(std::string("cannot write ") + out_lang_path);
    lf << uclone::format_language(*inst.lang);
    lf.close();
    *out = dup_string(uclone::format_instance(inst, out_lang_path));
}

}  // namespace

extern "C" {

const char* uc_last_error(void) { return g_last_error.c_str(); }

void uc_string_free(char* s) { std::free(s); }

uc_status uc_language_load(const char* path, uc_language** out) {
    return wrap([&] {
        auto* h = new uc_language;
        h->lang = uclone::load_language(path);
        h->path = path;
        *out = h;
    });
}

uc_status uc_language_parse(const char* text, uc_language** out) {
    return wrap([&] {
        auto* h = new uc_language;
        h->lang = uclone::parse_language(text);
        *out = h;
    });
}

void uc_language_free(uc_language* g) { delete g; }

uc_status uc_language_format(const uc_language* g, char** out) {
    return wrap([&] { *out = dup_string(uclone::format_language(g->lang)); });
}

uc_status uc_language_dual(const uc_language* g, uc_language** out) {
    return wrap([&] {
        auto* h = new uc_language;
        h->lang = uclone::dual_language(g->lang);
        *out = h;
    });
}

uc_status uc_instance_load(const char* path, uc_instance** out) {
    return wrap([&] {
        auto* h = new uc_instance;
        h->inst = uclone::load_instance(path);
        *out = h;
    });
}

void uc_instance_free(uc_instance* i) { delete i; }

uc_status uc_instance_format(const uc_instance* i, const char* lang_path, char** out) {
    return wrap([&] { *out = dup_string(uclone::format_instance(i->inst, lang_path)); });
}

uc_status uc_instance_dual(const uc_instance* i, uc_instance** out) {
    return wrap([&] {
        auto* h = new uc_instance;
        h->inst = uclone::dual_instance(i->inst);
        *out = h;
    });
}

uc_status uc_atom_profile(const uc_language* g, char** out) {
    return wrap([&] {
        uclone::AtomProfile p = uclone::atom_profile(g->lang);
        std::ostringstream s;
        s << "VERDICT atom-profile c0=" << p.c0 << " c1=" << p.c1 << " neg=" << p.neg
          << " meet=" << p.meet << " join=" << p.join << " maj=" << p.maj
          << " minority=" << p.minority << "\n";
        *out = dup_string(s.str());
    });
}

uc_status uc_usat_class(const uc_language* g, char** out) {
    return wrap([&] { *out = dup_string(usat_line(uclone::usat_class(g->lang))); });
}

uc_status uc_ucsp_class(const uc_language* g, const uc_limits* lim, char** out) {
    return wrap([&] {
        uclone::UcspVerdict v = uclone::ucsp_class(g->lang, budget_of(lim));
        std::ostringstream s;
        s << "VERDICT ucsp-class ";
        using K = uclone::UcspVerdict::Kind;
        if (v.kind == K::USComplete)
            s << "US-complete";
        else if (v.kind == K::CoNPComplete)
            s << "co-NP-complete const=" << v.const_value;
        else
            s << "other";
        s << (v.exact ? " exact" : " bound=" + std::to_string(v.bound)) << "\n";
        *out = dup_string(s.str());
    });
}

uc_status uc_classify(const uc_language* g, const uc_limits* lim, char** out) {
    return wrap([&] {
        (void)lim;
        uclone::CloneCatalog cat;
        uclone::CocloneId id = uclone::identify_coclone(g->lang, cat);
        std::ostringstream s;
        if (id.exact) {
            s << "VERDICT coclone " << id.name << "\n";
            s << "VERDICT covered " << covered_word(uclone::covered_verdict(id.name, cat))
              << "\n";
        } else {
            s << "VERDICT coclone-interval " << id.lower << " " << id.upper << "\n";
        }
        s << usat_line(uclone::usat_class(g->lang));
        *out = dup_string(s.str());
    });
}

uc_status uc_covered(const char* coclone_name, char** out) {
    return wrap([&] {
        uclone::CloneCatalog cat;
        std::string name = coclone_name;
        if (!cat.find_coclone(name) && cat.find(name))
            name = "I" + name;  // accept clone names too
        uclone::Covered c = uclone::covered_verdict(name, cat);
        *out = dup_string("VERDICT covered " + name + " " + covered_word(c) + "\n");
    });
}

uc_status uc_qfpp_closure(const uc_language* g, int n, const uc_limits* lim, char** out) {
    return wrap([&] {
        auto lang = std::make_shared<uclone::Language>(g->lang);
        uclone::QfppClosure c = uclone::qfpp_closure_detailed(lang, n, budget_of(lim));
        std::ostringstream s;
        s << "VERDICT qfpp-closure " << c.members.size() << "\n";
        for (std::size_t i = 0; i < c.members.size(); ++i)
            s << uclone::format_relation(
                c.member_relation(i, "M" + std::to_string(i)));
        *out = dup_string(s.str());
    });
}

uc_status uc_find_upp(const uc_language* g, const char* target, const uc_limits* lim,
                      char** out) {
    return wrap([&] {
        uclone::Relation r = load_target(target);
        auto lang = std::make_shared<uclone::Language>(g->lang);
        uclone::FindUppResult res =
            uclone::find_upp(r, lang, max_aux_of(lim), budget_of(lim));
        std::ostringstream s;
        if (res.found) {
            s << "VERDICT find-upp found " << res.cert.formula.bound_vars.size() << "\n";
            s << uclone::format_def(res.cert.formula,
                                    g->path.empty() ? "<language>" : g->path);
        } else {
            s << "VERDICT find-upp none-up-to " << res.searched_up_to << "\n";
        }
        *out = dup_string(s.str());
    });
}

uc_status uc_check_upp(const char* defs_path, const char* target, char** out) {
    return wrap([&] {
        std::vector<uclone::ConjFormula> defs = uclone::load_defs(defs_path);
        std::ostringstream s;
        for (const uclone::ConjFormula& f : defs) {
            uclone::Relation r = target ? load_target(target)
                                        : uclone::eval_formula(f).result.renamed(f.name);
            uclone::UppCheck chk = uclone::check_upp(f, r);
            s << "VERDICT check-upp " << f.name << " ";
            switch (chk.kind) {
                case uclone::UppCheck::Kind::Valid: s << "valid"; break;
                case uclone::UppCheck::Kind::WrongRelation: s << "wrong-relation"; break;
                case uclone::UppCheck::Kind::NotUnique:
                    s << "not-unique " << chk.bad_var;
                    break;
                case uclone::UppCheck::Kind::NotFrozen:
                    s << "not-frozen " << chk.bad_var;
                    break;
            }
            s << "\n";
        }
        *out = dup_string(s.str());
    });
}

uc_status uc_weak_base(const char* clone, int s, char** out) {
    return wrap([&] {
        int domain = 2;
        std::vector<uclone::Operation> gens = load_generators(clone, &domain);
        uclone::Relation wb = uclone::weak_base(gens, domain, s);
        std::ostringstream os;
        os << "VERDICT weak-base " << wb.arity() << " " << wb.size() << "\n";
        os << uclone::format_relation(wb);
        *out = dup_string(os.str());
    });
}

uc_status uc_emit_qfpp(const uc_language* g, int s, char** out) {
    return wrap([&] {
        auto lang = std::make_shared<uclone::Language>(g->lang);
        uclone::ConjFormula f = uclone::emit_weakbase_qfpp(lang, s);
        std::ostringstream os;
        os << "VERDICT emit-qfpp " << f.free_vars.size() << " " << f.atoms.size()
           << "\n";
        os << uclone::format_def(f, g->path.empty() ? "<language>" : g->path);
        *out = dup_string(os.str());
    });
}

uc_status uc_certify(const char* route, const char* lang_path, const char* target,
                     const char* plain_path, const char* witness_path, int n,
                     char** out) {
    return wrap([&] {
        std::string rt = route;
        uclone::Language gw = uclone::load_language(lang_path);
        uclone::PartialOperation f = uclone::load_pop(witness_path);
        uclone::CertifyResult res;
        std::string note;
        if (rt == "frozen") {
            if (!plain_path) throw uclone::error("frozen route needs a plain base");
            uclone::Language gp = uclone::load_language(plain_path);
            res = uclone::certify_frozen_collapse(gw, gp, f, n);
        } else if (rt == "ie0" || rt == "ie") {
            if (!target) throw uclone::error("route " + rt + " needs a target relation");
            uclone::CloneCatalog cat;
            res = uclone::certify_not_upp(
                gw, load_target(target), f,
                rt == "ie0" ? uclone::SeparationRoute::IE0 : uclone::SeparationRoute::IE,
                cat);
            if (rt == "ie") note = "note: IE route rests on a remark-level adaptation\n";
        } else {
            throw uclone::error("unknown route " + rt);
        }
        std::string s = res.certified
                            ? "VERDICT certify certified\n"
                            : "VERDICT certify rejected " + res.reason + "\n";
        *out = dup_string(s + note);
    });
}

uc_status uc_count(const uc_instance* i, int jobs, const uc_limits* lim, uint64_t* out) {
    return wrap([&] {
        *out = uclone::count_models(i->inst, jobs < 1 ? 1 : jobs, budget_of(lim));
    });
}

uc_status uc_unique(const uc_instance* i, const uc_limits* lim, char** out) {
    return wrap([&] {
        uclone::UniqueVerdict v = uclone::unique_model(i->inst, budget_of(lim));
        std::string s;
        using K = uclone::UniqueVerdict::Kind;
        if (v.kind == K::Zero) {
            s = "VERDICT unique zero\n";
        } else if (v.kind == K::Unique) {
            s = "VERDICT unique unique\n" + model_line("model", i->inst.vars, v.model);
        } else {
            s = "VERDICT unique many\n" + model_line("model", i->inst.vars, v.model) +
                model_line("second", i->inst.vars, v.second);
        }
        *out = dup_string(s);
    });
}

uc_status uc_enumerate(const uc_instance* i, uint64_t limit, const uc_limits* lim,
                       char** out) {
    return wrap([&] {
        std::vector<uclone::Tuple> models =
            uclone::enumerate_models(i->inst, limit, budget_of(lim));
        std::string s = "VERDICT enumerate " + std::to_string(models.size()) + "\n";
        for (const uclone::Tuple& t : models) s += model_line("model", i->inst.vars, t);
        *out = dup_string(s);
    });
}

uc_status uc_reduce_upp(const uc_instance* i, const char* defs_path,
                        const char* out_lang_path, char** out) {
    return wrap([&] {
        uclone::UppDefs defs;
        for (uclone::ConjFormula& f : uclone::load_defs(defs_path)) {
            std::string name = f.name;
            defs.emplace(std::move(name), std::move(f));
        }
        write_reduced(uclone::rewrite_upp(i->inst, defs), out_lang_path, out);
    });
}

uc_status uc_reduce_unsat(const uc_instance* i, const char* out_lang_path, char** out) {
    return wrap(
        [&] { write_reduced(uclone::unsat_to_usat(i->inst), out_lang_path, out); });
}

uc_status uc_reduce_eth(const uc_instance* i, const char* plan,
                        const char* out_lang_path, char** out) {
    return wrap([&] {
        uclone::EthPlan p;
        if (std::string(plan) == "3clause") {
            p = uclone::three_clause_plan();
        } else {
            for (uclone::ConjFormula& f : uclone::load_defs(plan)) {
                std::string name = f.name;
                if (name == "IMP")
                    p.e_imp = static_cast<int>(f.bound_vars.size());
                else
                    p.d_or = static_cast<int>(f.bound_vars.size());
                p.defs.emplace(std::move(name), std::move(f));
            }
        }
        write_reduced(uclone::eth_reduction(i->inst, p), out_lang_path, out);
    });
}

}  // extern "C"

// Command-line front end; talks to the core exclusively through the C API.
#include <cstdint>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "uclone.h"

namespace {

int fail(uc_status st) {
    std::fprintf(stderr, "error: %s\n", uc_last_error());
    return st == UC_ERR_BUDGET ? 2 : 1;
}

int emit(uc_status st, char** text) {
    if (st != UC_OK) return fail(st);
    std::fputs(*text, stdout);
    uc_string_free(*text);
    return 0;
}

struct LangGuard {
    uc_language* g = nullptr;
    ~LangGuard() { uc_language_free(g); }
};

struct InstGuard {
    uc_instance* i = nullptr;
    ~InstGuard() { uc_instance_free(i); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clone-theoretic analysis of unique satisfiability"};
    app.require_subcommand(1);

    int jobs = 1;
    unsigned seed = 0;
    uc_limits lim{0, 0, 0};
    app.add_option("--jobs", jobs, "worker threads for model counting");
    app.add_option("--seed", seed, "seed for randomized helpers");
    app.add_option("--max-aux", lim.max_aux, "auxiliary-variable search cap");
    app.add_option("--max-arity", lim.max_arity, "polymorphism arity cap");
    app.add_option("--max-vars", lim.max_vars, "instance variable cap");

    std::string lang_path, inst_path, target, defs, witness, plain, route, clone, plan,
        out_lang, name;
    int n = 0, s = 1, closure_n = 2;
    std::uint64_t limit = 0;

    CLI::App* c_classify = app.add_subcommand("classify", "co-clone and coverage");
    c_classify->add_option("lang", lang_path)->required();
    CLI::App* c_usat = app.add_subcommand("usat-class", "unique-SAT trichotomy");
    c_usat->add_option("lang", lang_path)->required();
    CLI::App* c_ucsp = app.add_subcommand("ucsp-class", "unique-CSP classification");
    c_ucsp->add_option("lang", lang_path)->required();
    CLI::App* c_prof = app.add_subcommand("atom-profile", "minimal-clone preservation bits");
    c_prof->add_option("lang", lang_path)->required();
    CLI::App* c_cov = app.add_subcommand("covered", "coverage verdict by co-clone name");
    c_cov->add_option("name", name)->required();
    CLI::App* c_qfpp = app.add_subcommand("qfpp-closure", "n-ary quantifier-free closure");
    c_qfpp->add_option("lang", lang_path)->required();
    c_qfpp->add_option("--n", closure_n, "arity of the closure");
    CLI::App* c_find = app.add_subcommand("find-upp", "search for a upp-definition");
    c_find->add_option("--lang", lang_path)->required();
    c_find->add_option("--target", target)->required();
    CLI::App* c_chk = app.add_subcommand("check-upp", "validate definitions");
    c_chk->add_option("defs", defs)->required();
    c_chk->add_option("--target", target);
    CLI::App* c_cert = app.add_subcommand("certify", "check a separation certificate");
    c_cert->add_option("--route", route)->required();
    c_cert->add_option("--lang", lang_path)->required();
    c_cert->add_option("--target", target);
    c_cert->add_option("--plain", plain);
    c_cert->add_option("--witness", witness)->required();
    c_cert->add_option("--n", n);
    CLI::App* c_wb = app.add_subcommand("weak-base", "weak base of a clone");
    c_wb->add_option("--clone", clone)->required();
    c_wb->add_option("--s", s);
    CLI::App* c_emit = app.add_subcommand("emit-qfpp", "core-construction definition");
    c_emit->add_option("--lang", lang_path)->required();
    c_emit->add_option("--s", s);
    CLI::App* c_count = app.add_subcommand("count", "exact model count");
    c_count->add_option("instance", inst_path)->required();
    CLI::App* c_uni = app.add_subcommand("unique", "unique-model decision");
    c_uni->add_option("instance", inst_path)->required();
    CLI::App* c_enum = app.add_subcommand("enumerate", "list models");
    c_enum->add_option("instance", inst_path)->required();
    c_enum->add_option("--limit", limit);
    CLI::App* c_rupp = app.add_subcommand("reduce-upp", "rewrite through upp-definitions");
    c_rupp->add_option("instance", inst_path)->required();
    c_rupp->add_option("--defs", defs)->required();
    c_rupp->add_option("--out-lang", out_lang)->required();
    CLI::App* c_runs = app.add_subcommand("reduce-unsat", "unsatisfiability to uniqueness");
    c_runs->add_option("instance", inst_path)->required();
    c_runs->add_option("--out-lang", out_lang)->required();
    CLI::App* c_reth = app.add_subcommand("reduce-eth", "switch-and-steering construction");
    c_reth->add_option("instance", inst_path)->required();
    c_reth->add_option("--plan", plan)->required();
    c_reth->add_option("--out-lang", out_lang)->required();
    CLI::App* c_dual = app.add_subcommand("dual", "dualize a language");
    c_dual->add_option("lang", lang_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    char* text = nullptr;
    uc_status st;
    if (*c_cov) return emit(uc_covered(name.c_str(), &text), &text);
    if (*c_chk)
        return emit(uc_check_upp(defs.c_str(), target.empty() ? nullptr : target.c_str(),
                                 &text), &text);
    if (*c_cert)
        return emit(uc_certify(route.c_str(), lang_path.c_str(),
                               target.empty() ? nullptr : target.c_str(),
                               plain.empty() ? nullptr : plain.c_str(), witness.c_str(),
                               n, &text), &text);
    if (*c_wb) return emit(uc_weak_base(clone.c_str(), s, &text), &text);

    if (*c_classify || *c_usat || *c_ucsp || *c_prof || *c_qfpp || *c_find || *c_emit ||
        *c_dual) {
        LangGuard g;
        st = uc_language_load(lang_path.c_str(), &g.g);
        if (st != UC_OK) return fail(st);
        if (*c_classify) return emit(uc_classify(g.g, &lim, &text), &text);
        if (*c_usat) return emit(uc_usat_class(g.g, &text), &text);
        if (*c_ucsp) return emit(uc_ucsp_class(g.g, &lim, &text), &text);
        if (*c_prof) return emit(uc_atom_profile(g.g, &text), &text);
        if (*c_qfpp) return emit(uc_qfpp_closure(g.g, closure_n, &lim, &text), &text);
        if (*c_find) return emit(uc_find_upp(g.g, target.c_str(), &lim, &text), &text);
        if (*c_emit) return emit(uc_emit_qfpp(g.g, s, &text), &text);
        LangGuard d;
        st = uc_language_dual(g.g, &d.g);
        if (st != UC_OK) return fail(st);
        return emit(uc_language_format(d.g, &text), &text);
    }

    InstGuard inst;
    st = uc_instance_load(inst_path.c_str(), &inst.i);
    if (st != UC_OK) return fail(st);
    if (*c_count) {
        std::uint64_t count = 0;
        st = uc_count(inst.i, jobs, &lim, &count);
        if (st != UC_OK) return fail(st);
        std::printf("VERDICT count %llu\n", static_cast<unsigned long long>(count));
        return 0;
    }
    if (*c_uni) return emit(uc_unique(inst.i, &lim, &text), &text);
    if (*c_enum) return emit(uc_enumerate(inst.i, limit, &lim, &text), &text);
    if (*c_rupp)
        return emit(uc_reduce_upp(inst.i, defs.c_str(), out_lang.c_str(), &text), &text);
    if (*c_runs) return emit(uc_reduce_unsat(inst.i, out_lang.c_str(), &text), &text);
    if (*c_reth)
        return emit(uc_reduce_eth(inst.i, plan.c_str(), out_lang.c_str(), &text), &text);
    return 1;
}

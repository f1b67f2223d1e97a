// Regenerates the sample files under data/ through the library's own
// formatters, so the shipped files always match the parsers.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "uclone/catalog.hpp"
#include "uclone/io.hpp"
#include "uclone/ppart.hpp"
#include "uclone/reduce.hpp"

using namespace uclone;
namespace fs = std::filesystem;

namespace {

fs::path out_dir;

void put(const std::string& name, const std::string& text) {
    std::ofstream f(out_dir / name, std::ios::binary);
    f << text;
    if (!f) {
        std::fprintf(stderr, "cannot write %s\n", name.c_str());
        std::exit(1);
    }
}

void put_language(const std::string& name, const Language& g) {
    put(name, format_language(g));
}

Language single(const Relation& r) {
    Language g(2);
    g.add(r);
    return g;
}

}  // namespace

int main(int argc, char** argv) {
    out_dir = argc > 1 ? argv[1] : "data";
    fs::create_directories(out_dir);

    put_language("onein3.rel", single(rel_one_in_three().renamed("OneInThree")));
    put_language("ne.rel", single(rel_ne().renamed("Ne")));
    put_language("nand2.rel", single(rel_nand(2).renamed("NAND2")));
    put_language("even3.rel", single(rel_even(3).renamed("Even3")));
    put_language("andgraph.rel", single(graph_of(Operation::b_and()).renamed("ANDG")));
    {
        Language g(2);
        g.add(Relation::full(1, 2).renamed("Full1"));
        g.add(Relation::full(2, 2).renamed("Full2"));
        put_language("full.rel", g);
    }
    put_language("r5.rel", single(rel_r5().renamed("R5")));
    put_language("r5z.rel", single(rel_r5_zero().renamed("R5Z")));
    put_language("threeclause.rel", *three_clause_language());
    put_language("or4.rel", single(rel_or(4).renamed("OR4")));
    put_language("t.rel", single(rel_t().renamed("T")));
    put_language("iffand.rel", single(rel_iff_and().renamed("IFFAND")));
    put_language("ie0wb.rel", single(table_weak_base("IE0")->renamed("Rw")));

    CloneCatalog cat(3);
    for (int n : {2, 3}) {
        const CloneEntry& e = cat.at_coclone("IS11^" + std::to_string(n));
        Language w(2), p(2);
        w.add(*e.weak_base);
        for (const Relation& r : e.plain_base) p.add(r);
        std::string tag = "is11" + std::to_string(n);
        put_language(tag + "wb.rel", w);
        put_language(tag + "pb.rel", p);
        put(std::string("frozen") + std::to_string(n) + ".pop",
            format_pop(frozen_witness(n)));
    }
    put("ie0w.pop", format_pop(ie0_witness()));

    {
        ConjFormula tight = or4_def_upp();
        tight.name = "OR4";
        put("or4.def", format_def(tight, "threeclause.rel"));
        ConjFormula loose = or4_def_loose();
        loose.name = "OR4";
        put("or4loose.def", format_def(loose, "threeclause.rel"));
    }

    auto inst_over = [](std::shared_ptr<const Language> g, std::vector<std::string> vars,
                        std::vector<Constraint> cs) {
        Instance i;
        i.domain = 2;
        i.lang = std::move(g);
        i.vars = std::move(vars);
        i.constraints = std::move(cs);
        i.validate();
        return i;
    };

    auto or4lang = std::make_shared<Language>(single(rel_or(4).renamed("OR4")));
    put("or4a.inst",
        format_instance(inst_over(or4lang, {"a", "b", "c", "d"},
                                  {{"OR4", {0, 1, 2, 3}},
                                   {"OR4", {3, 2, 1, 0}},
                                   {"OR4", {0, 0, 1, 1}}}),
                        "or4.rel"));

    auto cnf = three_clause_language();
    put("cnf_sat.inst",
        format_instance(inst_over(cnf, {"p", "q", "r"},
                                  {{"CL0", {0, 1, 2}}, {"CL5", {2, 2, 0}}}),
                        "threeclause.rel"));
    put("cnf_unsat.inst",
        format_instance(inst_over(cnf, {"x"},
                                  {{"CL0", {0, 0, 0}}, {"CL7", {0, 0, 0}}}),
                        "threeclause.rel"));

    auto r5lang = std::make_shared<Language>(single(rel_r5().renamed("R5")));
    put("r5sat.inst",
        format_instance(inst_over(r5lang, {"a", "b", "c", "d", "e"},
                                  {{"R5", {0, 1, 2, 3, 4}}}),
                        "r5.rel"));
    put("r5unsat.inst",
        format_instance(inst_over(r5lang, {"a", "d", "e"}, {{"R5", {0, 0, 0, 1, 2}}}),
                        "r5.rel"));
    return 0;
}

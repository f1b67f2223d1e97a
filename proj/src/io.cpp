#include "uclone/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace uclone {

namespace {

/// Strips '#' comments and returns whitespace-split tokens per line.
std::vector<std::vector<std::string>> token_lines(const std::string& text) {
    std::vector<std::vector<std::string>> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) out.push_back(std::move(toks));
    }
    return out;
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw parse_error("expected integer for " + what + ", got '" + s + "'");
    }
}

std::string resolve(const std::string& base_dir, const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_absolute() || base_dir.empty()) return path;
    return (std::filesystem::path(base_dir) / p).string();
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Language parse_language(const std::string& text) {
    auto lines = token_lines(text);
    std::size_t i = 0;
    std::vector<Relation> rels;
    int domain = -1;
    while (i < lines.size()) {
        const auto& head = lines[i];
        if (head[0] != "relation" || head.size() != 4)
            throw parse_error("expected 'relation <NAME> <ARITY> <DOMAIN>'");
        std::string name = head[1];
        int arity = parse_int(head[2], "arity");
        int d = parse_int(head[3], "domain size");
        if (domain == -1)
            domain = d;
        else if (domain != d)
            throw parse_error("mixed domain sizes in language file");
        ++i;
        std::vector<Tuple> tuples;
        for (; i < lines.size() && lines[i][0] != "end"; ++i) {
            const auto& row = lines[i];
            if (static_cast<int>(row.size()) != arity)
                throw parse_error("tuple of wrong length in relation " + name);
            Tuple t;
            for (const auto& s : row) {
                int v = parse_int(s, "tuple entry");
                if (v < 0 || v >= d) throw parse_error("tuple value out of domain in " + name);
                t.push_back(static_cast<std::uint8_t>(v));
            }
            tuples.push_back(std::move(t));
        }
        if (i == lines.size()) throw parse_error("missing 'end' for relation " + name);
        ++i;  // skip 'end'
        try {
            rels.push_back(Relation::make(name, arity, d, std::move(tuples)));
        } catch (const error& e) {
            throw parse_error(std::string(e.what()) + " (relation " + name + ")");
        }
    }
    if (rels.empty()) throw parse_error("language file contains no relations");
    Language g(domain);
    for (auto& r : rels) g.add(std::move(r));
    return g;
}

Language load_language(const std::string& path) { return parse_language(read_file(path)); }

std::string format_relation(const Relation& r) {
    std::ostringstream out;
    out << "relation " << (r.name().empty() ? "R" : r.name()) << " " << r.arity() << " "
        << r.domain() << "\n";
    for (const Tuple& t : r.tuples()) out << format_tuple(t) << "\n";
    out << "end\n";
    return out.str();
}

std::string format_language(const Language& g) {
    std::string out;
    for (const Relation& r : g.relations()) out += format_relation(r);
    return out;
}

Instance parse_instance(const std::string& text, const std::string& base_dir) {
    auto lines = token_lines(text);
    Instance inst;
    bool have_domain = false, have_lang = false, have_vars = false;
    for (const auto& toks : lines) {
        if (toks[0] == "domain") {
            if (toks.size() != 2) throw parse_error("expected 'domain <D>'");
            inst.domain = parse_int(toks[1], "domain size");
            have_domain = true;
        } else if (toks[0] == "lang") {
            if (toks.size() != 2) throw parse_error("expected 'lang <FILE>'");
            inst.lang = std::make_shared<Language>(load_language(resolve(base_dir, toks[1])));
            have_lang = true;
        } else if (toks[0] == "vars") {
            inst.vars.assign(toks.begin() + 1, toks.end());
            have_vars = true;
        } else {
            if (!have_vars) throw parse_error("constraint before 'vars' line");
            Constraint c;
            c.rel = toks[0];
            for (std::size_t i = 1; i < toks.size(); ++i) {
                int v = inst.var_index(toks[i]);
                if (v < 0) throw parse_error("unknown variable " + toks[i] + " in constraint");
                c.args.push_back(v);
            }
            inst.constraints.push_back(std::move(c));
        }
    }
    if (!have_domain || !have_lang) throw parse_error("instance needs 'domain' and 'lang' lines");
    inst.validate();
    return inst;
}

Instance load_instance(const std::string& path) {
    return parse_instance(read_file(path),
                          std::filesystem::path(path).parent_path().string());
}

std::string format_instance(const Instance& inst, const std::string& lang_path) {
    std::ostringstream out;
    out << "domain " << inst.domain << "\n";
    out << "lang " << lang_path << "\n";
    out << "vars";
    for (const auto& v : inst.vars) out << " " << v;
    out << "\n";
    for (const Constraint& c : inst.constraints) {
        out << c.rel;
        for (int a : c.args) out << " " << inst.vars[static_cast<std::size_t>(a)];
        out << "\n";
    }
    return out.str();
}

namespace {

/// Tokenizer for the definition grammar: punctuation and words.
std::vector<std::string> def_tokens(const std::string& text) {
    std::vector<std::string> toks;
    std::string cur;
    auto flush = [&]() {
        if (!cur.empty()) {
            toks.push_back(cur);
            cur.clear();
        }
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            flush();
        } else if (ch == '(' || ch == ')' || ch == ',' || ch == ';' || ch == ':' || ch == '&') {
            flush();
            toks.emplace_back(1, ch);
        } else {
            cur.push_back(ch);
        }
    }
    flush();
    return toks;
}

}  // namespace

std::vector<ConjFormula> parse_defs(const std::string& text, const std::string& base_dir) {
    auto toks = def_tokens(text);
    std::size_t i = 0;
    auto need = [&](const std::string& what) -> const std::string& {
        if (i >= toks.size()) throw parse_error("definition ends early, expected " + what);
        return toks[i];
    };
    auto expect = [&](const std::string& tok) {
        if (need("'" + tok + "'") != tok)
            throw parse_error("expected '" + tok + "', got '" + toks[i] + "'");
        ++i;
    };
    std::vector<ConjFormula> out;
    std::shared_ptr<const Language> cached_lang;
    std::string cached_path;
    while (i < toks.size()) {
        expect("def");
        ConjFormula f;
        f.name = need("definition name");
        ++i;
        expect("(");
        while (need("variable or ')'") != ")") {
            f.free_vars.push_back(toks[i]);
            ++i;
            if (need("',' or ')'") == ",") ++i;
        }
        ++i;  // ')'
        expect("over");
        std::string lang_path = resolve(base_dir, need("language file"));
        ++i;
        if (lang_path != cached_path) {
            cached_lang = std::make_shared<Language>(load_language(lang_path));
            cached_path = lang_path;
        }
        f.lang = cached_lang;
        expect(":");
        // Quantifier groups, then atoms; groups end with ';'.
        while (i < toks.size() &&
               (toks[i] == "exists!" || toks[i] == "exists" || toks[i] == "frozen")) {
            Quant q = toks[i] == "exists!"  ? Quant::ExistsUnique
                      : toks[i] == "frozen" ? Quant::Frozen
                                            : Quant::Exists;
            ++i;
            // "exists !" may also arrive as two tokens when spaced.
            if (q == Quant::Exists && i < toks.size() && toks[i] == "!") {
                q = Quant::ExistsUnique;
                ++i;
            }
            while (need("variable or ';'") != ";") {
                f.bound_vars.emplace_back(toks[i], q);
                ++i;
            }
            ++i;  // ';'
        }
        for (;;) {
            Atom a;
            a.rel = need("relation name");
            ++i;
            expect("(");
            while (need("variable or ')'") != ")") {
                a.args.push_back(toks[i]);
                ++i;
                if (need("',' or ')'") == ",") ++i;
            }
            ++i;  // ')'
            f.atoms.push_back(std::move(a));
            if (i < toks.size() && toks[i] == "&") {
                ++i;
                continue;
            }
            break;
        }
        f.validate();
        out.push_back(std::move(f));
    }
    if (out.empty()) throw parse_error("definition file contains no definitions");
    return out;
}

std::vector<ConjFormula> load_defs(const std::string& path) {
    return parse_defs(read_file(path), std::filesystem::path(path).parent_path().string());
}

std::string format_def(const ConjFormula& f, const std::string& lang_path) {
    std::ostringstream out;
    out << "def " << (f.name.empty() ? "R" : f.name) << "(";
    for (std::size_t i = 0; i < f.free_vars.size(); ++i)
        out << (i ? "," : "") << f.free_vars[i];
    out << ") over " << lang_path << " :\n";
    for (Quant q : {Quant::ExistsUnique, Quant::Exists, Quant::Frozen}) {
        std::string group;
        for (const auto& [v, vq] : f.bound_vars)
            if (vq == q) group += " " + v;
        if (group.empty()) continue;
        out << "  " << (q == Quant::ExistsUnique ? "exists!"
                        : q == Quant::Exists     ? "exists"
                                                 : "frozen")
            << group << " ;\n";
    }
    out << "  ";
    for (std::size_t i = 0; i < f.atoms.size(); ++i) {
        if (i) out << " & ";
        out << f.atoms[i].rel << "(";
        for (std::size_t j = 0; j < f.atoms[i].args.size(); ++j)
            out << (j ? "," : "") << f.atoms[i].args[j];
        out << ")";
    }
    out << "\n";
    return out.str();
}

PartialOperation parse_pop(const std::string& text) {
    auto lines = token_lines(text);
    if (lines.empty() || lines[0][0] != "pop" || lines[0].size() != 3)
        throw parse_error("expected 'pop <ARITY> <DOMAIN>'");
    int arity = parse_int(lines[0][1], "arity");
    int domain = parse_int(lines[0][2], "domain size");
    std::vector<std::pair<Tuple, int>> points;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& row = lines[i];
        if (static_cast<int>(row.size()) != arity + 2 || row[static_cast<std::size_t>(arity)] != "->")
            throw parse_error("expected '<d1> ... <dk> -> <v>' line in pop block");
        Tuple t;
        for (int j = 0; j < arity; ++j) {
            int v = parse_int(row[static_cast<std::size_t>(j)], "point entry");
            if (v < 0 || v >= domain) throw parse_error("point value out of domain");
            t.push_back(static_cast<std::uint8_t>(v));
        }
        int val = parse_int(row.back(), "value");
        if (val < 0 || val >= domain) throw parse_error("value out of domain");
        points.emplace_back(std::move(t), val);
    }
    return PartialOperation::from_points("f", arity, domain, points);
}

PartialOperation load_pop(const std::string& path) { return parse_pop(read_file(path)); }

std::string format_pop(const PartialOperation& f) {
    std::ostringstream out;
    out << "pop " << f.arity() << " " << f.domain() << "\n";
    std::uint64_t cells = f.table().size();
    for (std::uint64_t i = 0; i < cells; ++i) {
        if (f.table()[i] < 0) continue;
        out << format_tuple(index_tuple(i, f.domain(), f.arity())) << " -> "
            << static_cast<int>(f.table()[i]) << "\n";
    }
    return out.str();
}

std::string format_tuple(const Tuple& t) {
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(static_cast<int>(t[i]));
    }
    return out;
}

}  // namespace uclone

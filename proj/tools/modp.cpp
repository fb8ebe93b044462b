// Command-line front end: maps argv (or a JSON job file) onto a JobSpec.

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "modp/cli.hpp"

namespace {

using modp::cli::json;

// How an option's text becomes a params value.
enum class Kind { Str, Int, Json };

struct Option {
    std::string flag;  // without leading dashes
    std::string key;   // params key
    Kind kind;
    std::string help;
};

struct Command {
    std::string name;
    std::string help;
    std::vector<std::string> ops;
    std::vector<Option> options;
};

const std::vector<Command>& command_table() {
    static const std::vector<Command> t{
        {"satake", "Satake transform between T and tau bases",
         {"expand", "multiply", "moebius", "interval"},
         {{"n", "n", Kind::Int, "rank (checked against nu)"},
          {"q", "q", Kind::Int, "residue field size"},
          {"nu", "nu", Kind::Str, "weight, e.g. 1,0"},
          {"lambda", "lambda", Kind::Str, "coweight, e.g. -2,0"},
          {"mu", "mu", Kind::Str, "lower coweight for moebius/interval"},
          {"levi", "levi", Kind::Str, "composition, e.g. 1,1"},
          {"basis", "basis", Kind::Str, "input basis: T or tau"},
          {"to", "to", Kind::Str, "output basis: T or tau"},
          {"terms", "terms", Kind::Json, "JSON object of coweight -> coefficient"},
          {"a", "a", Kind::Json, "left factor terms (multiply)"},
          {"b", "b", Kind::Json, "right factor terms (multiply)"}}},
        {"classify", "Induction data, constituents and parameter pairs",
         {"validate", "delta", "constituents", "param-pair", "principal-series"},
         {{"q", "q", Kind::Int, "residue field size"},
          {"datum", "datum", Kind::Json, "JSON induction datum"},
          {"chars", "chars", Kind::Json, "JSON array of characters (principal-series)"}}},
        {"lattice", "Submodule lattice of a parabolic induction",
         {},
         {{"q", "q", Kind::Int, "residue field size"}, {"datum", "datum", Kind::Json, "JSON induction datum"}}},
        {"hecke0", "Pro-p Iwahori Hecke algebra at level zero",
         {"verify", "derive", "multiply"},
         {{"n", "n", Kind::Int, "rank"},
          {"cap", "cap", Kind::Int, "word length cap for derive (default n^2)"},
          {"a", "a", Kind::Json, "word, e.g. [\"S1\",\"Pi\"]"},
          {"b", "b", Kind::Json, "word"}}},
        {"weights", "Irreducible mod-p weights",
         {"canonical", "restrict", "is-regular", "regular-cover", "central-character", "partner", "stabilizer", "enumerate"},
         {{"n", "n", Kind::Int, "rank (enumerate)"},
          {"q", "q", Kind::Int, "residue field size"},
          {"nu", "nu", Kind::Str, "weight"},
          {"levi", "levi", Kind::Str, "composition"},
          {"i", "i", Kind::Int, "simple root index (partner)"}}},
        {"eigen", "Hecke eigensystems of parameter pairs",
         {"eval-tau", "eval-T", "factors-through", "supersingular", "twist", "change-of-weight"},
         {{"q", "q", Kind::Int, "residue field size"},
          {"pair", "pair", Kind::Json, "JSON pair {\"M\": [...], \"chars\": [...]}"},
          {"lambda", "lambda", Kind::Str, "coweight"},
          {"nu", "nu", Kind::Str, "weight"},
          {"levi", "levi", Kind::Str, "composition (factors-through)"},
          {"eta", "eta", Kind::Json, "JSON character (twist)"},
          {"i", "i", Kind::Int, "simple root index (change-of-weight)"}}},
        {"verify", "Run the finite-group oracle and level-zero checks",
         {},
         {{"max-n", "max_n", Kind::Int, "largest rank (default 3)"}, {"max-q", "max_q", Kind::Int, "largest q (default 3)"}}},
    };
    return t;
}

json convert(const Option& o, const std::string& text) {
    switch (o.kind) {
        case Kind::Int: {
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(text, &used);
            } catch (const std::logic_error&) {
                used = 0;
            }
            if (used == 0 || used != text.size()) throw modp::cli::schema_error("--" + o.flag + " expects an integer");
            return v;
        }
        case Kind::Json:
            try {
                return json::parse(text);
            } catch (const json::exception&) {
                throw modp::cli::schema_error("--" + o.flag + " expects JSON");
            }
        case Kind::Str:
            break;
    }
    return text;
}

int emit(const modp::cli::JobSpec& job, const std::string& out_path) {
    if (out_path.empty()) return modp::cli::run(job, std::cout);
    std::ostringstream buf;
    const int code = modp::cli::run(job, buf);
    std::ofstream f(out_path);
    if (!f) return modp::cli::emit_error(std::cout, "domain", "cannot write " + out_path, modp::cli::kExitDomain);
    f << buf.str();
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mod-p Satake transforms, Hecke eigensystems and submodule lattices"};
    app.require_subcommand(0, 1);

    std::string json_in, out_path, field;
    bool dot = false;
    app.add_option("--json-in", json_in, "read the whole job {command, params, scalar_field} from a JSON file");
    app.add_option("--out", out_path, "write the result to a file");
    app.add_option("--field", field, std::string("scalar field \"p\" or \"p:c0,...,1\" (else $") + modp::cli::kFieldEnv + ")");

    std::map<std::string, std::map<std::string, std::string>> values;
    std::map<std::string, std::string> ops;
    std::map<std::string, bool> all_flags;
    for (const auto& c : command_table()) {
        auto* sub = app.add_subcommand(c.name, c.help);
        if (!c.ops.empty()) {
            std::string list;
            for (const auto& o : c.ops) list += (list.empty() ? "" : ", ") + o;
            sub->add_option("op", ops[c.name], "operation: " + list);
        }
        for (const auto& o : c.options) sub->add_option("--" + o.flag, values[c.name][o.key], o.help);
        if (c.name == "lattice") sub->add_flag("--dot", dot, "emit Graphviz DOT instead of JSON");
        if (c.name == "verify") sub->add_flag("--all", all_flags["verify"], "run every check (the default)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return modp::cli::emit_error(std::cout, "schema", e.what(), modp::cli::kExitSchema);
    }

    modp::cli::JobSpec job;
    try {
        if (!json_in.empty()) {
            std::ifstream f(json_in);
            if (!f) return modp::cli::emit_error(std::cout, "domain", "cannot read " + json_in, modp::cli::kExitDomain);
            json j;
            try {
                j = json::parse(f);
            } catch (const json::exception& e) {
                throw modp::cli::schema_error(std::string("job file: ") + e.what());
            }
            job = modp::cli::parse_job(j);
        } else {
            const auto subs = app.get_subcommands();
            if (subs.empty()) {
                std::cout << app.help();
                return modp::cli::kExitSchema;
            }
            const auto* sub = subs.front();
            job.command = sub->get_name();
            for (const auto& c : command_table()) {
                if (c.name != job.command) continue;
                if (!ops[c.name].empty()) job.params["op"] = ops[c.name];
                for (const auto& o : c.options)
                    if (sub->count("--" + o.flag)) job.params[o.key] = convert(o, values[c.name][o.key]);
            }
            if (job.command == "lattice" && dot) job.params["dot"] = true;
        }
        if (!field.empty()) job.field = modp::cli::parse_field_string(field);
    } catch (const modp::cli::schema_error& e) {
        return modp::cli::emit_error(std::cout, "schema", e.what(), modp::cli::kExitSchema);
    }
    return emit(job, out_path);
}

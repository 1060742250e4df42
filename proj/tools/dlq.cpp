// dlq — exact decomposition and classification of the pieces of parabolic
// Deligne-Lusztig varieties, with formal graded-cohomology bookkeeping.
//
// Subcommands: pieces, classify, coxeter, deodhar, chain, cohom-bn.
// Problems come from flags or a JSON spec file (--spec); flags win.
// Output is deterministic UTF-8 JSON on stdout, diagnostics on stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dlq/report.hpp"

namespace {

using dlq::report::json;

int max_rank() {
    if (const char* env = std::getenv("DLQ_MAX_RANK")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 8;
}

struct GroupArgs {
    std::string group;
    std::string twist;  // label-level twists are parsed from the group name
    std::string specPath;
    json spec;  // loaded spec file, or null

    void load_spec() {
        if (specPath.empty()) return;
        std::ifstream in(specPath);
        if (!in) throw dlq::InvalidInput("cannot open spec file");
        in >> spec;
    }

    // Flags win over the spec file.
    json field(const std::string& key, const json& flagValue) const {
        if (!flagValue.is_null()) return flagValue;
        if (!spec.is_null() && spec.contains(key)) return spec.at(key);
        return json();
    }
};

dlq::CartanDatum datum_from(const GroupArgs& args) {
    json g = args.field("group", args.group.empty() ? json() : json(args.group));
    dlq::CartanDatum datum;
    if (g.is_string()) {
        datum = dlq::CartanDatum::named(g.get<std::string>());
    } else if (!args.spec.is_null() && args.spec.contains("cartan")) {
        datum.cartan = args.spec.at("cartan").get<std::vector<std::vector<int>>>();
        datum.rank = static_cast<int>(datum.cartan.size());
        datum.twist.resize(datum.rank);
        for (int i = 0; i < datum.rank; ++i) datum.twist[i] = i;
    } else {
        throw dlq::InvalidInput("no group given");
    }

    // 1-based twist permutation, from the flag or the spec file; overrides
    // whatever the label implied.
    json t = args.field("twist", args.twist.empty() ? json() : json(json::parse(
                                     "[" + args.twist + "]", nullptr, false)));
    if (t.is_array()) {
        if (static_cast<int>(t.size()) != datum.rank) throw dlq::InvalidInput("invalid twist");
        for (int i = 0; i < datum.rank; ++i) {
            if (!t[i].is_number_integer()) throw dlq::InvalidInput("invalid twist");
            datum.twist[i] = t[i].get<int>() - 1;
        }
    } else if (!t.is_null()) {
        throw dlq::InvalidInput("invalid twist");
    }
    datum.validate();
    if (datum.rank > max_rank()) throw dlq::InvalidInput("rank exceeds DLQ_MAX_RANK");
    return datum;
}

std::vector<int> parse_csv_word(const std::string& s, int rank) {
    json arr = json::array();
    std::size_t start = 0;
    if (s.empty()) return {};
    while (start <= s.size()) {
        std::size_t sep = s.find(',', start);
        std::string tok = s.substr(start, sep == std::string::npos ? sep : sep - start);
        try {
            arr.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw dlq::InvalidInput("invalid simple index");
        }
        if (sep == std::string::npos) break;
        start = sep + 1;
    }
    return dlq::report::word_from_json(arr, rank);
}

// Flag string if given, else spec field, else empty word.
std::vector<int> word_arg(const GroupArgs& args, const std::string& flag, const std::string& key,
                          int rank) {
    if (!flag.empty()) return parse_csv_word(flag, rank);
    if (!args.spec.is_null() && args.spec.contains(key))
        return dlq::report::word_from_json(args.spec.at(key), rank);
    return {};
}

dlq::SimpleSubset subset_arg(const GroupArgs& args, const std::string& flag,
                             const std::string& key, int rank) {
    dlq::SimpleSubset out;
    for (int i : word_arg(args, flag, key, rank)) out.add(i);
    return out;
}

dlq::ChainSpec chain_from_spec(const dlq::RootSystem& rs, const json& spec) {
    if (spec.is_null() || !spec.contains("chain")) throw dlq::InvalidInput("chain block missing");
    const json& ch = spec.at("chain");
    dlq::ChainSpec out;
    for (const json& t : ch.at("terms")) {
        dlq::ChainTerm term;
        term.I = dlq::report::subset_from_json(t.at("I"), rs.rank());
        term.w = dlq::WeylElt::from_word(rs, dlq::report::word_from_json(t.at("w"), rs.rank()));
        if (t.contains("gamma") && !t.at("gamma").is_null()) {
            int g = t.at("gamma").get<int>();
            if (g < 1 || g > rs.rank()) throw dlq::InvalidInput("invalid simple index");
            term.gamma = g - 1;
        }
        out.terms.push_back(std::move(term));
    }
    for (const json& xw : ch.at("x"))
        out.xs.push_back(
            dlq::WeylElt::from_word(rs, dlq::report::word_from_json(xw, rs.rank())));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of parabolic Deligne-Lusztig decompositions"};
    app.require_subcommand(1);

    GroupArgs args;
    std::string wFlag, iFlag, jFlag, xFlag, wPrimeFlag, coeffFlag;
    bool wPrimeGiven = false;
    int nFlag = -1;

    auto addCommon = [&](CLI::App* cmd) {
        cmd->add_option("--group", args.group, "type label, e.g. B3 or 2A3");
        cmd->add_option("--twist", args.twist, "diagram automorphism, e.g. 3,2,1");
        cmd->add_option("--spec", args.specPath, "JSON problem file");
    };

    CLI::App* pieces = app.add_subcommand("pieces", "decompose and classify all pieces");
    addCommon(pieces);
    pieces->add_option("--I", iFlag, "simple indices of I, comma-separated");
    pieces->add_option("--w", wFlag, "word of w, comma-separated");
    pieces->add_option("--J", jFlag, "simple indices of J");

    CLI::App* classify = app.add_subcommand("classify", "classify a single piece");
    addCommon(classify);
    classify->add_option("--I", iFlag, "simple indices of I");
    classify->add_option("--w", wFlag, "word of w");
    classify->add_option("--J", jFlag, "simple indices of J");
    classify->add_option("--x", xFlag, "word of the representative x");

    CLI::App* coxeter = app.add_subcommand("coxeter", "Coxeter-element piece report");
    addCommon(coxeter);
    coxeter->add_option("--w", wFlag, "word of the Coxeter element");
    coxeter->add_option("--J", jFlag, "simple indices of J");

    CLI::App* deodhar = app.add_subcommand("deodhar", "distinguished subexpressions and mass");
    addCommon(deodhar);
    deodhar->add_option("--w", wFlag, "word of w");
    deodhar->add_option("--x", xFlag, "word of x");
    deodhar->add_option("--w-prime", wPrimeFlag, "filter cells by product");

    CLI::App* chain = app.add_subcommand("chain", "validate and summarize a chain");
    addCommon(chain);
    chain->add_option("--J", jFlag, "simple indices of J");

    CLI::App* cohom = app.add_subcommand("cohom-bn", "type-B principal-series tables");
    cohom->add_option("--n", nFlag, "rank n >= 2");
    cohom->add_option("--coeff", coeffFlag, "triv or St");
    cohom->add_option("--spec", args.specPath, "JSON problem file");

    CLI11_PARSE(app, argc, argv);

    try {
        args.load_spec();
        json out;

        if (app.got_subcommand(cohom)) {
            if (nFlag < 0 && !args.spec.is_null() && args.spec.contains("n"))
                nFlag = args.spec.at("n").get<int>();
            if (coeffFlag.empty() && !args.spec.is_null() && args.spec.contains("coeff"))
                coeffFlag = args.spec.at("coeff").get<std::string>();
            if (coeffFlag.empty()) coeffFlag = "triv";
            dlq::BnCoefficient coeff;
            if (coeffFlag == "triv")
                coeff = dlq::BnCoefficient::Trivial;
            else if (coeffFlag == "St" || coeffFlag == "st")
                coeff = dlq::BnCoefficient::Steinberg;
            else
                throw dlq::InvalidInput("coeff must be triv or St");
            out = dlq::report::run_cohom_bn(nFlag, coeff);
        } else {
            dlq::RootSystem rs(datum_from(args));
            const int rank = rs.rank();

            if (app.got_subcommand(pieces) || app.got_subcommand(classify)) {
                dlq::SimpleSubset I = subset_arg(args, iFlag, "I", rank);
                dlq::SimpleSubset J = subset_arg(args, jFlag, "J", rank);
                dlq::WeylElt w = dlq::WeylElt::from_word(rs, word_arg(args, wFlag, "w", rank));
                if (app.got_subcommand(pieces)) {
                    out = dlq::report::run_pieces(rs, I, w, J);
                } else {
                    dlq::WeylElt x = dlq::WeylElt::from_word(rs, word_arg(args, xFlag, "x", rank));
                    out = dlq::report::run_classify(rs, I, w, J, x);
                }
            } else if (app.got_subcommand(coxeter)) {
                dlq::SimpleSubset J = subset_arg(args, jFlag, "J", rank);
                dlq::WeylElt w = dlq::WeylElt::from_word(rs, word_arg(args, wFlag, "w", rank));
                out = dlq::report::run_coxeter(rs, w, J);
            } else if (app.got_subcommand(deodhar)) {
                std::vector<int> wWord = word_arg(args, wFlag, "w", rank);
                dlq::WeylElt x = dlq::WeylElt::from_word(rs, word_arg(args, xFlag, "x", rank));
                std::optional<dlq::WeylElt> wPrime;
                wPrimeGiven = deodhar->count("--w-prime") > 0 ||
                              (!args.spec.is_null() && args.spec.contains("w_prime"));
                if (wPrimeGiven) {
                    std::vector<int> pw = !wPrimeFlag.empty() || deodhar->count("--w-prime")
                                              ? parse_csv_word(wPrimeFlag, rank)
                                              : dlq::report::word_from_json(
                                                    args.spec.at("w_prime"), rank);
                    wPrime = dlq::WeylElt::from_word(rs, pw);
                }
                out = dlq::report::run_deodhar(rs, wWord, x, wPrime);
            } else if (app.got_subcommand(chain)) {
                dlq::SimpleSubset J = subset_arg(args, jFlag, "J", rank);
                out = dlq::report::run_chain(rs, chain_from_spec(rs, args.spec), J);
            }
        }

        std::cout << out.dump(2) << "\n";
        return 0;
    } catch (const dlq::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dlq::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

// comical: command line front end for the cubical/simplicial engine.
//
// Subcommands are registered as the corresponding modules exist; run with
// --help for the current list.

#include "CLI11.hpp"

#include "comical/boxcat.hpp"

#include <iostream>

namespace {

int run_boxnf(const std::string& word, std::optional<int> src, bool as_json) {
    comical::BoxOperator op = comical::parse_box_operator(word, src);
    if (as_json) {
        std::cout << "{\"normal_form\":\"" << op.to_string() << "\",\"src\":" << op.src_dim()
                  << ",\"tgt\":" << op.tgt_dim() << "}\n";
    } else {
        std::cout << op << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"computational engine for marked cubical sets"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "machine readable output");

    auto* boxnf = app.add_subcommand("boxnf", "normalize a box-category operator word");
    std::string word;
    int src_dim = -1;
    boxnf->add_option("word", word, "operator word, e.g. 'd1,0;s2;g1,1'")->required();
    boxnf->add_option("--src", src_dim, "source dimension (inferred when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (boxnf->parsed())
            return run_boxnf(word, src_dim < 0 ? std::nullopt : std::optional<int>(src_dim),
                             as_json);
    } catch (const comical::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

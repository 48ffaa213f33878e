#include <iostream>

#include "CLI11.hpp"
#include "wh/acceptance.hpp"

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::vector<int> ids;
    std::string filter, fixtures = wh::default_fixture_dir();
    app.add_option("--criterion", ids, "criterion numbers, all when omitted");
    app.add_option("--filter", filter, "name or tag substring");
    app.add_option("--fixtures", fixtures, "fixture directory");
    CLI11_PARSE(app, argc, argv);

    auto results = wh::run_acceptance(ids, filter, fixtures, std::cout);
    if (results.empty()) {
        std::cout << "no criterion matched\n";
        return 1;
    }
    for (const auto& r : results)
        if (!r.pass) return 1;
    return 0;
}

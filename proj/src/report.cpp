#include "bredon/report.hpp"

#include <sstream>

#include <json.hpp>

#include "bredon/error.hpp"

namespace bredon {

std::string to_text(const HomologyRun& run)
{
    const std::string symbol = run.command == "cohomology" ? "H^" : "H_";
    std::ostringstream os;
    for (std::size_t n = 0; n < run.groups.size(); ++n)
        os << symbol << n << " = " << run.groups[n].to_string() << '\n';
    return os.str();
}

std::string to_json(const HomologyRun& run)
{
    nlohmann::ordered_json j;
    j["command"] = run.command;
    j["group"] = run.group;
    j["family"] = run.family;
    j["coefficients"] = run.coefficients;
    j["degree"] = run.degree;
    auto groups = nlohmann::ordered_json::array();
    for (const auto& g : run.groups)
        groups.push_back(g.to_string());
    j["groups"] = groups;
    j["provenance"] = {{"truncation", run.truncation},
                       {"orbit_counts", run.orbit_counts},
                       {"chain_ranks", run.chain_ranks},
                       {"seconds", run.seconds}};
    return j.dump(2) + "\n";
}

HomologyRun homology_run_from_json(const std::string& text)
{
    try {
        auto j = nlohmann::json::parse(text);
        HomologyRun run;
        run.command = j.at("command").get<std::string>();
        run.group = j.at("group").get<std::string>();
        run.family = j.at("family").get<std::string>();
        run.coefficients = j.at("coefficients").get<std::string>();
        run.degree = j.at("degree").get<std::size_t>();
        for (const auto& g : j.at("groups"))
            run.groups.push_back(parse_invariants(g.get<std::string>()));
        const auto& p = j.at("provenance");
        run.truncation = p.at("truncation").get<std::size_t>();
        run.orbit_counts = p.at("orbit_counts").get<std::vector<std::size_t>>();
        run.chain_ranks = p.at("chain_ranks").get<std::vector<std::size_t>>();
        run.seconds = p.at("seconds").get<double>();
        return run;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("bad homology report: ") + e.what());
    }
}

} // namespace bredon

#include "cli.hpp"

#include "hiveflow/enumerate.hpp"
#include "hiveflow/errors.hpp"
#include "hiveflow/io.hpp"
#include "hiveflow/lr_oracle.hpp"
#include "hiveflow/solver.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

namespace hiveflow::cli {

namespace {

struct Triple {
    std::string lambda, mu, nu;

    void add_to(CLI::App* app, bool required)
    {
        app->add_option("--lambda", lambda, "first partition, e.g. 2,1")->required(required);
        app->add_option("--mu", mu, "second partition")->required(required);
        app->add_option("--nu", nu, "target partition")->required(required);
    }
    bool given() const { return !lambda.empty() || !mu.empty() || !nu.empty(); }
    Instance instance() const
    {
        return Instance::make(parse_partition(lambda), parse_partition(mu), parse_partition(nu));
    }
};

void emit(std::ostream& out, const ordered_json& j)
{
    out << j.dump(2) << '\n';
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Littlewood-Richardson positivity and counting via hive flows"};
    app.require_subcommand(1);

    Triple t_decide, t_count, t_render, t_oracle;
    std::string algorithm = "scaling";
    CLI::App* decide_cmd = app.add_subcommand("decide", "decide whether the coefficient is positive");
    t_decide.add_to(decide_cmd, true);
    decide_cmd->add_option("--algorithm", algorithm, "plain or scaling")
        ->check(CLI::IsMember({"plain", "scaling"}));

    std::size_t limit = default_enumeration_limit;
    bool verify = false;
    CLI::App* count_cmd = app.add_subcommand("count", "count integral hive flows exactly");
    t_count.add_to(count_cmd, true);
    count_cmd->add_option("--limit", limit, "give up past this many points");
    count_cmd->add_flag("--verify", verify, "cross-check against the tableau oracle");

    std::string format = "dot", flow_path;
    CLI::App* render_cmd = app.add_subcommand("render", "draw a solved instance or a flow file");
    t_render.add_to(render_cmd, false);
    render_cmd->add_option("--format", format, "dot or tikz")->check(CLI::IsMember({"dot", "tikz"}));
    render_cmd->add_option("--flow", flow_path, "JSON flow map, e.g. the output of decide");

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "count LR tableaux directly");
    t_oracle.add_to(oracle_cmd, true);

    app.add_subcommand("selftest", "run the invariant suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : InvalidInput;
    }

    try {
        if (*decide_cmd) {
            const Instance inst = t_decide.instance();
            const SolveReport r = decide(inst, algorithm == "plain" ? Algorithm::Plain : Algorithm::Scaling);
            emit(out, report_to_json(r));
            return r.positive ? Ok : NotPositive;
        }
        if (*count_cmd) {
            const Instance inst = t_count.instance();
            ordered_json j;
            try {
                j["count"] = count_P(inst, limit);
            } catch (const CapExceeded&) {
                j["count"] = "cap_exceeded";
                j["limit"] = limit;
                emit(out, j);
                return CapHit;
            }
            if (verify) {
                const std::uint64_t c = lr_count(inst.lambda, inst.mu, inst.nu);
                j["lr_count"] = c;
                j["verified"] = c == j["count"].get<std::uint64_t>();
                if (!j["verified"].get<bool>()) {
                    emit(out, j);
                    err << "count disagrees with the tableau oracle\n";
                    return NotPositive;
                }
            }
            emit(out, j);
            return Ok;
        }
        if (*render_cmd) {
            FlowClass f;
            if (!flow_path.empty()) {
                std::ifstream in(flow_path);
                if (!in) {
                    err << "cannot read " << flow_path << '\n';
                    return InvalidInput;
                }
                ordered_json doc;
                try {
                    doc = ordered_json::parse(in);
                } catch (const nlohmann::json::exception& e) {
                    err << "bad JSON in " << flow_path << ": " << e.what() << '\n';
                    return InvalidInput;
                }
                f = flow_from_json(doc);
            } else if (t_render.given()) {
                f = decide_scaling(t_render.instance()).final_flow;
            } else {
                err << "render needs --flow or --lambda/--mu/--nu\n";
                return InvalidInput;
            }
            out << (format == "tikz" ? render_tikz(f) : render_dot(f));
            return Ok;
        }
        if (*oracle_cmd) {
            const Instance inst = t_oracle.instance();
            ordered_json j;
            j["lr_count"] = lr_count(inst.lambda, inst.mu, inst.nu);
            emit(out, j);
            return Ok;
        }
        return selftest(out, err);
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << '\n';
        return InvalidInput;
    } catch (const nlohmann::json::exception& e) {
        err << "invalid input: " << e.what() << '\n';
        return InvalidInput;
    }
}

} // namespace hiveflow::cli

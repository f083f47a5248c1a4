// planarium: reversed Dickson polynomials, Dembowski-Ostrom classification,
// planarity testing and curve point counting over odd-characteristic fields.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include "planarium/cli.hpp"

namespace {

struct CommonOpts {
    std::string output;
    std::string format = "json";
};

// Every option lands in the JobSpec parameter map as a string, so a job is
// reproducible from its serialized form.
class JobBuilder {
public:
    JobBuilder(CLI::App& app, std::string command, const std::string& desc, CommonOpts& common)
        : command_(std::move(command)) {
        sub_ = app.add_subcommand(command_, desc);
        sub_->add_option("-o,--output", common.output, "write the report to a file");
        sub_->add_option("--format", common.format, "json | csv | text");
    }

    CLI::App* app() { return sub_; }

    void opt(const std::string& flag, const std::string& key, const std::string& desc) {
        auto store = std::make_shared<std::string>();
        sub_->add_option(flag, *store, desc);
        captures_.push_back({key, store, false});
    }

    void flag(const std::string& flag, const std::string& key, const std::string& desc) {
        auto store = std::make_shared<std::string>();
        sub_->add_flag_callback(flag, [store] { *store = "1"; }, desc);
        captures_.push_back({key, store, true});
    }

    bool parsed() const { return sub_->parsed(); }

    planarium::JobSpec job(const CommonOpts& common) const {
        planarium::JobSpec spec;
        spec.command = command_;
        spec.format = planarium::parse_format(common.format);
        for (const auto& cap : captures_)
            if (!cap.value->empty()) {
                if (cap.key == "field")
                    spec.field = *cap.value;
                else
                    spec.parameters[cap.key] = *cap.value;
            }
        return spec;
    }

private:
    struct Capture {
        std::string key;
        std::shared_ptr<std::string> value;
        bool is_flag;
    };
    std::string command_;
    CLI::App* sub_ = nullptr;
    std::vector<Capture> captures_;
};

void add_scan_opts(JobBuilder& b) {
    b.opt("--p", "p", "odd prime characteristic");
    b.opt("--kmax", "kmax", "largest degree index k (default 40)");
    b.opt("--dmax", "dmax", "largest composition exponent d (default 28)");
    b.opt("--m", "m", "comma list of kind indices (default: all m in [0, p-1])");
    b.flag("--include-p-multiples", "include-p-multiples",
           "scan k and d divisible by p as well");
    b.opt("--ceiling", "ceiling", "k ceiling guarding the exact-integer work (default 64)");
    b.opt("--threads", "threads", "worker count; output order is canonical regardless");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-field computer algebra for reversed Dickson polynomials: "
                 "Dembowski-Ostrom classification, planarity, curve point counts"};
    app.require_subcommand(1);
    CommonOpts common;
    std::vector<std::unique_ptr<JobBuilder>> builders;
    auto add = [&](const std::string& name, const std::string& desc) -> JobBuilder& {
        builders.push_back(std::make_unique<JobBuilder>(app, name, desc, common));
        return *builders.back();
    };

    {
        auto& b = add("field-info", "construct F_{p^e} and print its modulus");
        b.opt("--field", "field", "field spec: p^e or p^e/c0,c1,...,1");
    }
    {
        auto& b = add("rdp-show", "coefficients of a reversed Dickson hat polynomial");
        b.opt("--p", "p", "odd prime characteristic");
        b.opt("--k", "k", "degree index");
        b.opt("--m", "m", "kind index in [0, p-1]");
        b.opt("--family", "family", "family letter D|E|F|G|H (kinds m = 0..4)");
        b.opt("--d", "d", "composition exponent (default 1)");
        b.opt("--route", "route", "closed | recursive (default closed)");
        b.opt("--field", "field", "optional field to instantiate in");
        b.opt("--a", "a", "parameter a as c0,c1,... (default 1)");
    }
    {
        auto& b = add("do-check", "decide the Dembowski-Ostrom property of one instance");
        b.opt("--p", "p", "odd prime characteristic");
        b.opt("--k", "k", "degree index");
        b.opt("--m", "m", "kind index in [0, p-1]");
        b.opt("--family", "family", "family letter D|E|F|G|H");
        b.opt("--d", "d", "composition exponent");
        b.flag("--reduced", "reduced", "also report DO shape after reduction mod X^q - X "
                                       "(function-level, exploratory)");
        b.opt("--field", "field", "field for --reduced");
        b.opt("--a", "a", "parameter for --reduced (default 1)");
    }
    {
        auto& b = add("classify-scan", "brute-force DO detection vs the encoded classification");
        add_scan_opts(b);
    }
    {
        auto& b = add("appendix-verify",
                      "like classify-scan but emits only the DO list; exit 1 on any discrepancy");
        add_scan_opts(b);
    }
    {
        auto& b = add("planarity", "planarity verdicts for hat polynomials or explicit f");
        b.opt("--field", "field", "field spec: p^e or p^e/c0,c1,...,1");
        b.opt("--family", "family", "family letter D|E|F|G|H");
        b.opt("--k", "k", "degree index");
        b.opt("--m", "m", "kind index (alternative to --family)");
        b.opt("--d", "d", "composition exponent (default 1)");
        b.opt("--poly", "poly", "explicit polynomial, e.g. \"1*X^10 + 2*X^6 + 2*X^2\"");
        b.opt("--a", "a", "single parameter a");
        b.flag("--all-a", "all-a", "one record per nonzero a (batch mode)");
        b.opt("--method", "method", "auto | delta | two-to-one | linearized | both");
        b.opt("--threads", "threads", "worker count");
    }
    {
        auto& b = add("curve-count", "exhaustive point count of a difference-function curve");
        b.opt("--preset", "preset", "D4.B | E10.h | E15.h | G6.B | G11.h");
        b.opt("--terms", "terms", "custom curve as \"(i,j):elem; ...\"");
        b.opt("--field", "field", "field spec");
        b.opt("--a", "a", "curve parameter (default 1)");
        b.flag("--a-one", "a-one", "count the a=1 specialization (the certified form)");
        b.flag("--allow-slow", "allow-slow", "permit 6561 < q <= 59049");
        b.opt("--threads", "threads", "worker count");
    }
    {
        auto& b = add("curve-bound", "affine Weil lower bound q-(d-1)(d-2)sqrt(q)-d-1");
        b.opt("--q", "q", "field size");
        b.opt("--degree", "degree", "total degree of the curve");
        b.opt("--boundary", "boundary", "axis-solution cap to compare against");
    }

    // two-word spelling: curve count / curve bound
    auto* curve = app.add_subcommand("curve", "curve utilities (count, bound)");
    {
        builders.push_back(std::make_unique<JobBuilder>(*curve, "count",
                                                        "alias of curve-count", common));
        auto& b = *builders.back();
        b.opt("--preset", "preset", "D4.B | E10.h | E15.h | G6.B | G11.h");
        b.opt("--terms", "terms", "custom curve as \"(i,j):elem; ...\"");
        b.opt("--field", "field", "field spec");
        b.opt("--a", "a", "curve parameter (default 1)");
        b.flag("--a-one", "a-one", "count the a=1 specialization");
        b.flag("--allow-slow", "allow-slow", "permit 6561 < q <= 59049");
        b.opt("--threads", "threads", "worker count");
    }
    {
        builders.push_back(std::make_unique<JobBuilder>(*curve, "bound",
                                                        "alias of curve-bound", common));
        auto& b = *builders.back();
        b.opt("--q", "q", "field size");
        b.opt("--degree", "degree", "total degree of the curve");
        b.opt("--boundary", "boundary", "axis-solution cap to compare against");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        for (auto& b : builders) {
            if (!b->parsed()) continue;
            planarium::JobSpec spec = b->job(common);
            if (spec.command == "count") spec.command = "curve-count";
            if (spec.command == "bound") spec.command = "curve-bound";
            if (!common.output.empty()) {
                std::ofstream f(common.output);
                if (!f) planarium::fail("IoFailure", "cannot open '" + common.output + "'");
                return planarium::run_job(spec, f);
            }
            return planarium::run_job(spec, std::cout);
        }
        std::cerr << "error: no subcommand given\n";
        return 2;
    } catch (const planarium::Error& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

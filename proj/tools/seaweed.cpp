// Command line driver: run one double partition (optionally writing a JSON
// report and SVG pictures) or sweep every instance up to a given rank.
// Exit codes: 0 success, 1 usage error, 2 falsifier fired.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seaweed/render.hpp"
#include "seaweed/report.hpp"
#include "seaweed/sweep.hpp"

namespace {

std::vector<seaweed::Interval> parse_sizes(const std::string& s, int n) {
    std::vector<seaweed::Interval> out;
    std::istringstream is(s);
    std::string tok;
    int l = 1;
    while (std::getline(is, tok, ',')) {
        int len = std::stoi(tok);
        out.push_back({l, l + len - 1});
        l += len;
    }
    if (l != n + 1) throw seaweed::invalid_input("block sizes must sum to n");
    return out;
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << data;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"adapted pairs and regular nilpotent lifts for seaweed subalgebras"};
    int n = 0, sweep_n = 0, samples = 5;
    unsigned long long seed = 12345;
    std::string jplus, jminus, policy_file, report_path, svg_dir, csv_path;
    app.add_option("--n", n, "rank: work in sl_n");
    app.add_option("--jplus", jplus, "upper block sizes, comma separated (e.g. 2,4,2)");
    app.add_option("--jminus", jminus, "lower block sizes, comma separated");
    app.add_option("--policy-file", policy_file, "JSON config overriding the defaults");
    app.add_option("--seed", seed, "seed for the verification sampling");
    app.add_option("--samples", samples, "sampling attempts for the truncation certificate");
    app.add_option("--report", report_path, "write the JSON run report here");
    app.add_option("--svg", svg_dir, "write SVG pictures into this directory");
    app.add_option("--sweep", sweep_n, "sweep every instance for 2 <= n <= N");
    app.add_option("--csv", csv_path, "write the sweep rows as CSV here");
    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep_n > 0) {
            auto rows = seaweed::sweep(sweep_n, seed, samples);
            std::string csv = seaweed::sweep_csv(rows);
            if (!csv_path.empty()) write_file(csv_path, csv);
            else std::cout << csv;
            int bad = 0;
            for (const auto& r : rows)
                if (!r.ok) ++bad;
            std::cerr << rows.size() << " instances, " << bad << " falsified\n";
            return bad ? 2 : 0;
        }

        seaweed::RunConfig cfg;
        if (!policy_file.empty()) {
            std::ifstream is(policy_file);
            if (!is) throw seaweed::invalid_input("cannot read " + policy_file);
            seaweed::json j = seaweed::json::parse(is);
            cfg = seaweed::config_from_json(j);
        }
        if (n > 0) cfg.n = n;
        if (!jplus.empty()) cfg.jplus = parse_sizes(jplus, cfg.n);
        if (!jminus.empty()) cfg.jminus = parse_sizes(jminus, cfg.n);
        cfg.seed = seed;
        cfg.samples = samples;
        if (cfg.n == 0) {
            std::cerr << "error: no instance given (use --n with --jplus/--jminus, "
                         "--policy-file, or --sweep)\n";
            return 1;
        }

        seaweed::RunResult res = seaweed::run(cfg);
        seaweed::json rep = seaweed::report_json(cfg, res);
        if (!report_path.empty()) write_file(report_path, rep.dump(2) + "\n");
        if (!svg_dir.empty()) {
            std::filesystem::create_directories(svg_dir);
            for (const auto& [name, svg] : seaweed::render_all(res))
                write_file((std::filesystem::path(svg_dir) / name).string(), svg);
        }
        std::cout << "S =";
        for (const auto& g : res.pair.S) std::cout << ' ' << g.str();
        std::cout << "\nchain =";
        for (int p : res.assembly.chain) std::cout << ' ' << p;
        std::cout << "\nw =";
        for (int k : res.assembly.w.letters) std::cout << " s" << k;
        std::cout << "\ntruncated index = " << res.stabilizerDim
                  << ", certified = " << (res.cert.certified ? "yes" : "no")
                  << ", regular lift = yes\n";
        return 0;
    } catch (const seaweed::falsifier& f) {
        std::cerr << "falsifier: " << f.what() << "\n";
        return 2;
    } catch (const seaweed::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

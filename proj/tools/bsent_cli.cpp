// Command-line front end: figure-reproduction CSV sweeps and separability
// verdicts as JSON.  Exit codes: 0 success, 2 usage error, 3 numerical guard.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bsent/entropy.hpp"
#include "bsent/fock.hpp"
#include "bsent/gaussian.hpp"
#include "bsent/oracle.hpp"
#include "bsent/presets.hpp"
#include "bsent/squeezed.hpp"

namespace {

using nlohmann::json;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct OutputTarget {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    explicit OutputTarget(const std::string& path) {
        if (path != "-") {
            file.open(path);
            if (!file) throw std::invalid_argument("cannot open output file: " + path);
            stream = &file;
        }
    }
};

struct PhiOption {
    double phi = 0.0;
    double phi_pi = 0.0;

    void attach(CLI::App* cmd, double default_pi) {
        phi_pi = default_pi;
        phi = default_pi * M_PI;
        auto* a = cmd->add_option("--phi", phi, "Beam splitter phase in radians");
        auto* b = cmd->add_option("--phi-pi", phi_pi, "Beam splitter phase in units of pi");
        a->excludes(b);
        b->excludes(a);
        cmd->callback([this, b] {
            if (b->count() > 0) phi = phi_pi * M_PI;
        });
    }

    double value() const { return phi; }
};

double entropy_out(const bsent::EntropyValue& e, bool bits) { return bits ? e.bits() : e.nats; }

const char* entropy_header(bool bits) { return bits ? "entropy_bits" : "entropy_nats"; }
const char* entropy_units(bool bits) { return bits ? "bits" : "nats"; }

int run_fock(int n1, int n2, double R, double phi, const std::string& output,
             const std::string& format, bool bits) {
    if (n1 + n2 > 40) throw std::invalid_argument("fock: n1 + n2 must be at most 40");
    const auto bs = bsent::BeamSplitter::from_reflectance(R, phi);
    const auto state = bsent::fock_output(n1, n2, bs);
    const auto entropy = bsent::von_neumann_entropy(state);
    OutputTarget out(output);
    const int total = n1 + n2;
    if (format == "csv") {
        *out.stream << "n1,n2,N1,N2,amp_re,amp_im," << entropy_header(bits) << "\n";
        *out.stream << "-,-,-,-,-,-," << entropy_units(bits) << "\n";
        for (int N1 = 0; N1 <= total; ++N1) {
            const auto a = state.at(N1, total - N1);
            *out.stream << n1 << ',' << n2 << ',' << N1 << ',' << (total - N1) << ','
                        << fmt(a.real()) << ',' << fmt(a.imag()) << ','
                        << fmt(entropy_out(entropy, bits)) << "\n";
        }
    } else {
        json j;
        j["n1"] = n1;
        j["n2"] = n2;
        j["reflectance"] = R;
        j["phi"] = phi;
        j["entropy_nats"] = entropy.nats;
        if (bits) j["entropy_bits"] = entropy.bits();
        json amps = json::array();
        for (int N1 = 0; N1 <= total; ++N1) {
            const auto a = state.at(N1, total - N1);
            amps.push_back({{"N1", N1}, {"N2", total - N1}, {"re", a.real()}, {"im", a.imag()}});
        }
        j["amplitudes"] = amps;
        *out.stream << j.dump(2) << "\n";
    }
    return 0;
}

int run_figure2(int total, int steps, const std::string& output, const std::string& format,
                bool bits) {
    if (total < 0 || steps < 2) throw std::invalid_argument("figure2: total >= 0, steps >= 2");
    OutputTarget out(output);
    json rows = json::array();
    if (format == "csv") {
        *out.stream << "k,R," << entropy_header(bits) << "\n-,-," << entropy_units(bits) << "\n";
    }
    for (int k = 0; k <= total / 2; ++k) {
        for (int i = 0; i < steps; ++i) {
            const double R = static_cast<double>(i) / (steps - 1);
            const auto bs = bsent::BeamSplitter::from_reflectance(R, 0.0);
            const auto e = bsent::von_neumann_entropy(bsent::fock_output(k, total - k, bs));
            if (format == "csv") {
                *out.stream << k << ',' << fmt(R) << ',' << fmt(entropy_out(e, bits)) << "\n";
            } else {
                rows.push_back({{"k", k}, {"R", R}, {entropy_header(bits), entropy_out(e, bits)}});
            }
        }
    }
    if (format != "csv") *out.stream << rows.dump(2) << "\n";
    return 0;
}

int run_figure3(double s1, double phi, int steps, double s2_max, const std::string& output,
                const std::string& format, bool bits) {
    if (steps < 2 || s2_max <= 0.0) throw std::invalid_argument("figure3: steps >= 2, s2-max > 0");
    OutputTarget out(output);
    json rows = json::array();
    if (format == "csv") {
        *out.stream << "s2,R," << entropy_header(bits) << "\n-,-," << entropy_units(bits) << "\n";
    }
    for (int i = 0; i < steps; ++i) {
        const double s2 = s2_max * i / (steps - 1);
        for (int j = 0; j < steps; ++j) {
            const double R = static_cast<double>(j) / (steps - 1);
            const auto bs = bsent::BeamSplitter::from_reflectance(R, phi);
            const auto e = bsent::squeezed_output_entropy(s1, s2, bs);
            if (format == "csv") {
                *out.stream << fmt(s2) << ',' << fmt(R) << ',' << fmt(entropy_out(e, bits))
                            << "\n";
            } else {
                rows.push_back(
                    {{"s2", s2}, {"R", R}, {entropy_header(bits), entropy_out(e, bits)}});
            }
        }
    }
    if (format != "csv") *out.stream << rows.dump(2) << "\n";
    return 0;
}

int run_squeezed(double s1, double s2, double R, double phi, const std::string& output,
                 const std::string& format, bool bits) {
    const auto bs = bsent::BeamSplitter::from_reflectance(R, phi);
    const auto e = bsent::squeezed_output_entropy(s1, s2, bs);
    const double quarter = phi / (M_PI / 2.0);
    const bool decomposable =
        std::abs(R - 0.5) < 1e-12 && std::abs(quarter - std::round(quarter)) < 1e-9;
    OutputTarget out(output);
    if (format == "csv") {
        *out.stream << "s1,s2,R,phi," << entropy_header(bits) << "\n-,-,-,rad,"
                    << entropy_units(bits) << "\n";
        *out.stream << fmt(s1) << ',' << fmt(s2) << ',' << fmt(R) << ',' << fmt(phi) << ','
                    << fmt(entropy_out(e, bits)) << "\n";
    } else {
        json j;
        j["s1"] = s1;
        j["s2"] = s2;
        j["reflectance"] = R;
        j["phi"] = phi;
        j["entropy_nats"] = e.nats;
        if (bits) j["entropy_bits"] = e.bits();
        if (decomposable) {
            const auto z = bsent::effective_two_mode_squeezing(s1, s2, phi);
            j["effective_two_mode_squeezing"] = {{"re", z.real()}, {"im", z.imag()},
                                                 {"abs", std::abs(z)}};
        }
        *out.stream << j.dump(2) << "\n";
    }
    return 0;
}

int run_gaussian(const std::string& preset, double nbar, double s, double R, double phi,
                 const std::string& output, const std::string& format) {
    const auto bs = bsent::BeamSplitter::from_reflectance(R, phi);
    bsent::GaussianState state = [&] {
        if (preset == "sq-thermal-pair") return bsent::preset_squeezed_thermal_pair(nbar, s, bs);
        if (preset == "sq-thermal+vacuum")
            return bsent::preset_squeezed_thermal_vacuum(nbar, s, bs);
        if (preset == "sq-vacuum+thermal")
            return bsent::preset_squeezed_vacuum_thermal(nbar, s, bs);
        throw std::invalid_argument("unknown preset: " + preset);
    }();
    const auto verdict = bsent::duan_separability(state);
    const char* decision =
        verdict.decision == bsent::Separability::separable ? "separable" : "entangled";
    OutputTarget out(output);
    if (format == "csv") {
        *out.stream << "preset,nbar,s,R,phi,decision,duan_lhs,duan_rhs,ppt_min_symplectic\n";
        *out.stream << "-,-,-,-,rad,-,-,-,-\n";
        *out.stream << preset << ',' << fmt(nbar) << ',' << fmt(s) << ',' << fmt(R) << ','
                    << fmt(phi) << ',' << decision << ',' << fmt(verdict.duan_lhs) << ','
                    << fmt(verdict.duan_rhs) << ',' << fmt(verdict.ppt_min_symplectic) << "\n";
    } else {
        json j;
        j["preset"] = preset;
        j["nbar"] = nbar;
        j["s"] = s;
        j["reflectance"] = R;
        j["phi"] = phi;
        j["decision"] = decision;
        j["duan_lhs"] = verdict.duan_lhs;
        j["duan_rhs"] = verdict.duan_rhs;
        j["ppt_min_symplectic"] = verdict.ppt_min_symplectic;
        *out.stream << j.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Beam splitter entanglement simulator"};
    app.require_subcommand(1);

    std::string output = "-";
    std::string format;
    bool bits = false;
    app.add_option("--output", output, "Output path, or - for stdout")->capture_default_str();
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--bits", bits, "Report entropy in bits instead of nats");

    // fock
    auto* fock = app.add_subcommand("fock", "Exact Fock-input beam splitter output");
    int n1 = 0, n2 = 0;
    double fock_R = 0.5;
    fock->add_option("n1", n1, "Photons in input a")->required()->check(CLI::NonNegativeNumber);
    fock->add_option("n2", n2, "Photons in input b")->required()->check(CLI::NonNegativeNumber);
    fock->add_option("--reflectance", fock_R, "Reflectance R = r^2")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    PhiOption fock_phi;
    fock_phi.attach(fock, 0.0);

    // figure2
    auto* fig2 = app.add_subcommand("figure2", "Entropy curves for Fock inputs |k, N-k>");
    int total = 10, f2_steps = 101;
    fig2->add_option("--total", total, "Total photon number N")->capture_default_str();
    fig2->add_option("--steps", f2_steps, "Points on the R grid")->capture_default_str();

    // figure3
    auto* fig3 = app.add_subcommand("figure3", "Entropy surface for squeezed-vacuum inputs");
    double s1 = 0.5, s2_max = 1.0;
    int f3_steps = 21;
    fig3->add_option("--s1", s1, "Fixed squeezing of input a")->capture_default_str();
    fig3->add_option("--steps", f3_steps, "Points per grid axis")->capture_default_str();
    fig3->add_option("--s2-max", s2_max, "Upper end of the s2 grid")->capture_default_str();
    PhiOption fig3_phi;
    fig3_phi.attach(fig3, 0.0);

    // squeezed
    auto* sq = app.add_subcommand("squeezed", "Single squeezed-input configuration");
    double sq_s1 = 0.0, sq_s2 = 0.0, sq_R = 0.5;
    sq->add_option("--s1", sq_s1, "Squeezing of input a")->capture_default_str();
    sq->add_option("--s2", sq_s2, "Squeezing of input b")->capture_default_str();
    sq->add_option("--reflectance", sq_R, "Reflectance R = r^2")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    PhiOption sq_phi;
    sq_phi.attach(sq, 0.5);

    // gaussian
    auto* ga = app.add_subcommand("gaussian", "Separability verdict for a Gaussian case study");
    std::string preset;
    double ga_nbar = 0.0, ga_s = 0.5, ga_R = 0.5;
    ga->add_option("--preset", preset, "Case study")
        ->required()
        ->check(CLI::IsMember({"sq-thermal-pair", "sq-thermal+vacuum", "sq-vacuum+thermal"}));
    ga->add_option("--nbar", ga_nbar, "Mean thermal photon number")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    ga->add_option("--s", ga_s, "Squeezing parameter")->capture_default_str();
    ga->add_option("--reflectance", ga_R, "Reflectance R = r^2")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    PhiOption ga_phi;
    ga_phi.attach(ga, 0.5);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (fock->parsed()) {
            return run_fock(n1, n2, fock_R, fock_phi.value(), output,
                            format.empty() ? "json" : format, bits);
        }
        if (fig2->parsed()) {
            return run_figure2(total, f2_steps, output, format.empty() ? "csv" : format, bits);
        }
        if (fig3->parsed()) {
            return run_figure3(s1, fig3_phi.value(), f3_steps, s2_max, output,
                               format.empty() ? "csv" : format, bits);
        }
        if (sq->parsed()) {
            return run_squeezed(sq_s1, sq_s2, sq_R, sq_phi.value(), output,
                                format.empty() ? "json" : format, bits);
        }
        if (ga->parsed()) {
            return run_gaussian(preset, ga_nbar, ga_s, ga_R, ga_phi.value(), output,
                                format.empty() ? "json" : format);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "numerical guard: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

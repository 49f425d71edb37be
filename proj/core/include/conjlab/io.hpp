#pragma once

#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "conjlab/conjugate.hpp"
#include "conjlab/helicoid.hpp"
#include "conjlab/js_solver.hpp"

namespace conjlab {

using Json = nlohmann::ordered_json;
using Header = std::vector<std::pair<std::string, std::string>>;

// round-trippable and locale independent
std::string fmt(double v);

// fails with IoError when the parent directory is missing or the file cannot be created
std::ofstream open_output(const std::filesystem::path& path);

void write_json(const std::filesystem::path& path, const Json& j);

void write_profile_csv(const std::filesystem::path& path, const HelicoidProfile& p, const Header& header = {});
void write_solution_csv(const std::filesystem::path& path, const GraphSolution& sol, std::span<const double> nu,
                        const Header& header = {});
// every `stride`-th sample plus the last one
void write_curve_csv(const std::filesystem::path& path, const PlanarCurve& c, const Header& header = {},
                     std::size_t stride = 1);

struct SvgPanel {
    std::string title;
    const AssembledBoundary* boundary = nullptr;
    const EmbeddednessReport* report = nullptr;
};
void write_domain_svg(const std::filesystem::path& path, std::span<const SvgPanel> panels, const Header& header = {});

// triangulated graph of Helicoid::height over [-xmax, xmax] x [-vmax, vmax]
void write_helicoid_obj(const std::filesystem::path& path, const Helicoid& hel, double xmax, double vmax, int nx,
                        int nv, const Header& header = {});

} // namespace conjlab

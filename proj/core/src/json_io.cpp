#include "siglap/json_io.hpp"

#include <nlohmann/json.hpp>

namespace siglap {

using nlohmann::json;

std::string graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.w});
  return json{{"n", g.vertex_count()}, {"edges", std::move(edges)}}.dump();
}

std::string vector_to_json(std::span<const double> x) {
  return json(std::vector<double>(x.begin(), x.end())).dump();
}

std::string certificate_to_json(const Graph& g, const EigenCertificate& cert) {
  json z = json::array();
  for (int idx = 0; idx < g.edge_count(); ++idx) {
    const auto& e = g.edges()[static_cast<size_t>(idx)];
    z.push_back({e.u, e.v, cert.z[static_cast<size_t>(idx)]});
  }
  return json{{"mu", cert.mu},
              {"x", cert.x.values},
              {"z", std::move(z)},
              {"tol", cert.tol}}
      .dump();
}

}  // namespace siglap

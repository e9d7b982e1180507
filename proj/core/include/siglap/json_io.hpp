#ifndef SIGLAP_JSON_IO_HPP
#define SIGLAP_JSON_IO_HPP

#include <span>
#include <string>

#include "siglap/eigenpair.hpp"
#include "siglap/graph.hpp"

namespace siglap {

// {"n": ..., "edges": [[u, v, w], ...]} with 0-based endpoints.
std::string graph_to_json(const Graph& g);

// A plain JSON array of the n coordinates.
std::string vector_to_json(std::span<const double> x);

// {"mu": ..., "x": [...], "z": [[u, v, z_uv], ...], "tol": ...}
std::string certificate_to_json(const Graph& g, const EigenCertificate& cert);

}  // namespace siglap

#endif

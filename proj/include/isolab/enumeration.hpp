#pragma once

#include <cstddef>
#include <functional>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "isolab/graph.hpp"

namespace isolab {

/// Built-in enumerator limit.
inline constexpr int kEnumMaxOrder = 10;

/// Universe of graphs to enumerate: orders n_min..n_max, edge window
/// [m_min, m_max] (m_max < 0 means unbounded).
struct EnumSpec {
    int n_min = 1;
    int n_max = 1;
    int m_min = 0;
    int m_max = -1;
    bool connected_only = true;

    std::string describe() const;
};

/// Every isomorphism class in the universe exactly once, in canonical
/// labeling, ordered by n and then by graph6 string. Throws CapacityError
/// when n_max exceeds kEnumMaxOrder.
std::vector<Graph> enumerate_graphs(const EnumSpec& spec);
void for_each_graph(const EnumSpec& spec, const std::function<void(const Graph&)>& visit);

class IngestError : public std::runtime_error {
public:
    IngestError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Newline-delimited graph6 stream. An optional ">>graph6<<" header on the
/// first line is skipped and '\r' line endings are accepted. The first bad
/// line aborts with IngestError naming it.
void ingest_graph6(std::istream& in, const std::function<void(const Graph&, std::size_t line)>& visit);
std::vector<Graph> ingest_graph6(std::istream& in);

}  // namespace isolab

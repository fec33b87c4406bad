#ifndef DICHROMA_RECORD_HPP
#define DICHROMA_RECORD_HPP

#include <dichroma/products.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace dichroma
{
    using Json = nlohmann::json;

    inline constexpr const char * record_schema = "dichroma.experiment";
    inline constexpr int record_schema_version = 1;
    inline constexpr const char * toolkit_version = "0.1.0";

    /// One run of one command: what was asked, what came out, the evidence,
    /// and how long it took.
    struct ExperimentRecord
    {
        std::string command;
        Json params = Json::object();
        std::optional<std::uint64_t> seed;
        Json result = Json::object();
        Json certificate;
        double runtime_ms = 0;

        /// Keys are sorted, so equal records serialise identically.
        auto to_json(bool with_runtime = true) const -> Json;
        static auto from_json(const Json & j) -> ExperimentRecord;
    };

    /// The record without its runtime, serialised: the part that must be
    /// identical across runs and thread counts.
    auto deterministic_payload(const ExperimentRecord & r) -> std::string;

    /// {"kind": "coloring" | "dicoloring", "graph": <text format>,
    ///  "palette": [...], "assignment": [...]}
    auto coloring_certificate(const AnyGraph & g, const Coloring & f) -> Json;

    /// Reparses the graph and rechecks the colouring. Certificates of other
    /// kinds (or none) are accepted as-is.
    auto revalidate_certificate(const Json & certificate) -> bool;
}

#endif

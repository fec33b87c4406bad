#include <dichroma/core.hpp>
#include <dichroma/error.hpp>
#include <dichroma/io.hpp>
#include <dichroma/record.hpp>

namespace dichroma
{
    auto ExperimentRecord::to_json(bool with_runtime) const -> Json
    {
        Json j;
        j["schema"] = record_schema;
        j["version"] = record_schema_version;
        j["toolkit"] = toolkit_version;
        j["command"] = command;
        j["params"] = params;
        j["seed"] = seed ? Json(*seed) : Json(nullptr);
        j["result"] = result;
        j["certificate"] = certificate;
        if (with_runtime)
            j["runtime_ms"] = runtime_ms;
        return j;
    }

    auto ExperimentRecord::from_json(const Json & j) -> ExperimentRecord
    {
        if (! j.is_object() || j.value("schema", "") != record_schema)
            throw InvalidArgument("not an experiment record");
        if (j.value("version", 0) != record_schema_version)
            throw InvalidArgument("unsupported experiment record version");
        ExperimentRecord r;
        r.command = j.at("command").get<std::string>();
        r.params = j.at("params");
        if (! j.at("seed").is_null())
            r.seed = j.at("seed").get<std::uint64_t>();
        r.result = j.at("result");
        r.certificate = j.at("certificate");
        r.runtime_ms = j.value("runtime_ms", 0.0);
        return r;
    }

    auto deterministic_payload(const ExperimentRecord & r) -> std::string
    {
        return r.to_json(false).dump();
    }

    auto coloring_certificate(const AnyGraph & g, const Coloring & f) -> Json
    {
        Json c;
        c["kind"] = std::holds_alternative<Graph>(g) ? "coloring" : "dicoloring";
        c["graph"] = to_text(g);
        c["palette"] = f.palette;
        c["assignment"] = f.assignment;
        return c;
    }

    auto revalidate_certificate(const Json & certificate) -> bool
    {
        if (! certificate.is_object() || ! certificate.contains("kind"))
            return true;
        auto kind = certificate.at("kind").get<std::string>();
        if (kind != "coloring" && kind != "dicoloring")
            return true;

        auto g = parse_graph_string(certificate.at("graph").get<std::string>());
        Coloring f{certificate.at("palette").get<std::vector<Colour>>(), certificate.at("assignment").get<std::vector<Colour>>()};
        try {
            if (kind == "coloring")
                return std::holds_alternative<Graph>(g) && is_proper_coloring(std::get<Graph>(g), f);
            return std::holds_alternative<Digraph>(g) && is_proper_dicoloring(std::get<Digraph>(g), f);
        }
        catch (const InvalidArgument &) {
            return false;
        }
    }
}

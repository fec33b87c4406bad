#include <dichroma/error.hpp>
#include <dichroma/vertex_set.hpp>

namespace dichroma
{
    using std::to_string;

    auto make_vertex_set(std::size_t n, std::initializer_list<Vertex> members) -> VertexSet
    {
        return make_vertex_set(n, std::vector<Vertex>(members));
    }

    auto make_vertex_set(std::size_t n, const std::vector<Vertex> & members) -> VertexSet
    {
        VertexSet result(n);
        for (auto v : members) {
            if (v >= n)
                throw InvalidArgument("vertex " + std::to_string(v) + " out of range for " + std::to_string(n) + " vertices");
            result.set(v);
        }
        return result;
    }

    auto to_vector(const VertexSet & s) -> std::vector<Vertex>
    {
        std::vector<Vertex> result;
        result.reserve(s.count());
        for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v))
            result.push_back(v);
        return result;
    }

    auto to_string(const VertexSet & s) -> std::string
    {
        std::string result = "{";
        bool first = true;
        for (auto v : to_vector(s)) {
            if (! first)
                result += ",";
            result += std::to_string(v);
            first = false;
        }
        return result + "}";
    }

    auto to_mask(const VertexSet & s) -> Mask
    {
        if (s.size() > mask_capacity)
            throw LimitExceeded("vertex set of size " + std::to_string(s.size()) + " does not fit in a 64-bit mask");
        Mask result = 0;
        for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v))
            result |= bit(v);
        return result;
    }

    auto from_mask(Mask m, std::size_t n) -> VertexSet
    {
        VertexSet result(n);
        for_each_bit(m, [&](Vertex v) { result.set(v); });
        return result;
    }
}

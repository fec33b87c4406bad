#include <dichroma/error.hpp>
#include <dichroma/parallel.hpp>

#include <cstdlib>
#include <string>

namespace dichroma
{
    auto resolve_threads(std::optional<std::size_t> requested) -> std::size_t
    {
        if (requested) {
            if (*requested == 0)
                throw InvalidArgument("thread count must be positive");
            return *requested;
        }
        if (const char * env = std::getenv("DICHROMA_THREADS"); env && *env) {
            std::size_t used = 0;
            unsigned long long value = 0;
            try {
                value = std::stoull(env, &used);
            }
            catch (const std::exception &) {
                used = 0;
            }
            if (used == 0 || env[used] != '\0' || value == 0)
                throw InvalidArgument(std::string("DICHROMA_THREADS must be a positive integer, got '") + env + "'");
            return static_cast<std::size_t>(value);
        }
        auto hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : hw;
    }
}

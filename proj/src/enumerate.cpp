#include "naeflow/enumerate.hpp"

#include <exception>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

extern "C" {
#include "nauty.h"
int geng_main(int argc, char* argv[]);
void naeflow_geng_out(FILE* f, graph* g, int n);
int naeflow_geng_prune(graph* g, int n, int maxn);
}

namespace {

std::mutex geng_mutex;
const std::function<void(const naeflow::Graph&)>* current_visit = nullptr;
const std::function<bool(const naeflow::Graph&)>* current_prune = nullptr;
std::uint64_t current_count = 0;
std::exception_ptr current_error;

naeflow::Graph to_graph(graph* g, int n)
{
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) {
        set* row = GRAPHROW(g, i, 1);
        for (int j = i + 1; j < n; ++j)
            if (ISELEMENT(row, j))
                es.emplace_back(i, j);
    }
    return naeflow::Graph(n, es);
}

} // namespace

extern "C" void naeflow_geng_out(FILE*, graph* g, int n)
{
    ++current_count;
    if (!current_visit || current_error)
        return;
    // exceptions must not unwind through geng's C frames
    try {
        (*current_visit)(to_graph(g, n));
    } catch (...) {
        current_error = std::current_exception();
    }
}

extern "C" int naeflow_geng_prune(graph* g, int n, int)
{
    if (!current_prune || !*current_prune || current_error)
        return 0;
    try {
        return (*current_prune)(to_graph(g, n)) ? 1 : 0;
    } catch (...) {
        current_error = std::current_exception();
        return 1;
    }
}

namespace naeflow {

std::uint64_t enumerate_graphs(const EnumerateOptions& opt, const std::function<void(const Graph&)>& visit)
{
    if (opt.n < 1 || opt.n > max_enumeration_order)
        throw precondition_error("enumeration order must be in 1.." + std::to_string(max_enumeration_order));
    // geng exits the process on an empty degree window
    if (opt.min_degree >= opt.n || (opt.max_degree >= 0 && opt.min_degree > opt.max_degree))
        return 0;
    std::vector<std::string> args{"geng", "-q"};
    if (opt.connected)
        args.emplace_back("-c");
    if (opt.bipartite)
        args.emplace_back("-b");
    if (opt.min_degree >= 0)
        args.push_back("-d" + std::to_string(opt.min_degree));
    if (opt.max_degree >= 0)
        args.push_back("-D" + std::to_string(opt.max_degree));
    args.push_back(std::to_string(opt.n));
    if (opt.max_edges >= 0)
        args.push_back("0:" + std::to_string(opt.max_edges));

    std::lock_guard lock(geng_mutex);
    std::vector<char*> argv;
    for (auto& a : args)
        argv.push_back(a.data());
    argv.push_back(nullptr);
    current_visit = &visit;
    current_prune = &opt.prune;
    current_count = 0;
    current_error = nullptr;
    geng_main(static_cast<int>(args.size()), argv.data());
    current_visit = nullptr;
    current_prune = nullptr;
    if (current_error)
        std::rethrow_exception(std::exchange(current_error, nullptr));
    return current_count;
}

} // namespace naeflow

#ifndef HODGEPOLY_TESTS_PROCESS_HPP
#define HODGEPOLY_TESTS_PROCESS_HPP

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace proc {

struct Output {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Runs a shell command, capturing stdout and stderr separately.
inline Output run(const std::string& command, const std::string& env = {})
{
    char name[] = "/tmp/hodgepoly-stderr-XXXXXX";
    int fd = mkstemp(name);
    if (fd >= 0)
        close(fd);
    const std::string full = (env.empty() ? "" : env + " ") + command + " 2>" + name;
    Output o;
    FILE* pipe = popen(full.c_str(), "r");
    if (pipe == nullptr)
        return o;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        o.out.append(buf, n);
    int status = pclose(pipe);
    o.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    o.err = slurp(name);
    std::remove(name);
    return o;
}

} // namespace proc

#endif

#pragma once

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "test_util.hpp"

namespace clitest {

struct CommandResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

// Runs a shell command, capturing stdout; stderr is dropped.
inline CommandResult run_command(const std::string& command,
                                 const std::string& workdir = ".") {
    const std::string full =
        "cd '" + workdir + "' && { " + command + " ; } 2>/dev/null";
    FILE* pipe = popen(full.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed");
    std::string output;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        output.append(buf, got);
    const int status = pclose(pipe);
    CommandResult result;
    result.output = std::move(output);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

inline std::string make_temp_dir() {
    char pattern[] = "/tmp/bnum_cli_XXXXXX";
    if (mkdtemp(pattern) == nullptr)
        throw std::runtime_error("mkdtemp failed");
    return pattern;
}

struct DocumentedExample {
    std::string command;          // with "bnum" already substituted
    std::string expected_output;  // exact stdout bytes
};

// Pulls every ```console block out of the README: lines starting with
// "$ bnum" are commands, following lines up to the next command or the
// end of the block are the expected stdout.
inline std::vector<DocumentedExample> readme_examples() {
    const std::string readme = testutil::read_file(BNUM_README_PATH);
    std::vector<DocumentedExample> examples;

    std::vector<std::string> lines;
    std::string line;
    for (const char c : readme) {
        if (c == '\n') {
            lines.push_back(line);
            line.clear();
        } else {
            line.push_back(c);
        }
    }
    if (!line.empty()) lines.push_back(line);

    bool in_block = false;
    for (const auto& l : lines) {
        if (!in_block) {
            if (l == "```console") in_block = true;
            continue;
        }
        if (l == "```") {
            in_block = false;
            continue;
        }
        if (l.rfind("$ bnum", 0) == 0) {
            DocumentedExample example;
            example.command =
                std::string(BNUM_CLI_PATH) + l.substr(std::string("$ bnum").size());
            examples.push_back(std::move(example));
        } else if (!examples.empty()) {
            examples.back().expected_output += l + "\n";
        }
    }
    return examples;
}

}  // namespace clitest

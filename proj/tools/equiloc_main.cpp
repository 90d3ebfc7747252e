#include <iostream>

#include "equiloc/jobfile.hpp"

namespace {

void usage() {
    std::cerr << "usage: equiloc <jobfile>\n"
              << "Runs one batch job (see README for the job-file grammar) and\n"
              << "writes exact CSV to the job's output path (stdout if none).\n";
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        usage();
        return 1;
    }
    try {
        equiloc::JobSpec job = equiloc::parse_job_file(argv[1]);
        return equiloc::run_job(job);
    } catch (const equiloc::Error& e) {
        std::cerr << e.what() << "\n";
        return e.kind() == "ParseError" ? 4 : 3;
    } catch (const std::exception& e) {
        std::cerr << "InternalError: " << e.what() << "\n";
        return 3;
    }
}

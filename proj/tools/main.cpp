#include "lyap/cli.hpp"
#include "lyap/errors.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        lyap::cli::Command cmd = lyap::cli::parse_args(args);
        return lyap::cli::run(cmd, std::cout);
    } catch (const lyap::cli::HelpRequested& help) {
        std::cout << help.text;
        return 0;
    } catch (const lyap::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

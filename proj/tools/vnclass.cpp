#include "vnclass/cli.hpp"

int main(int argc, char** argv)
{
    return vnclass::cli::run(argc, argv);
}

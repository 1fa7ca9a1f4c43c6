#include "levyfp/report.hpp"

int main(int argc, char** argv) { return levyfp::run_cli(argc, argv); }

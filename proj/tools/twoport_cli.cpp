#include <cstdio>

int main() {
    std::puts("twoport: subcommands not wired up yet");
    return 2;
}

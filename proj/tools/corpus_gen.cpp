#include <iostream>

int main() {
    std::cout << "corpus generator placeholder\n";
    return 0;
}

#include <iostream>

int main() {
    std::cout << "newpoints CLI placeholder\n";
    return 0;
}

#include <iostream>

int main() {
    std::cout << "sflow: experiment runner (under construction)\n";
    return 2;
}

#include <iostream>

int main() {
    std::cout << "arcalg\n";
    return 0;
}

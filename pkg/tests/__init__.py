# Tests Package



# Package entry point: python -m wzslab <command>
"""
Weighted zero-sum laboratory
Routes to the command-line interface
"""
import sys

def main():
    from wzslab.cli_module import main as cli_main
    return cli_main()

if __name__ == '__main__':
    sys.exit(main())

# Worker pool helpers shared by enumeration and discovery
